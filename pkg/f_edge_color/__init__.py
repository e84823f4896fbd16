"""f-edge-color - f-colorings, f-class classification and exact checks for simple graphs."""

__version__ = "0.1.0"
