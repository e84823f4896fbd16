"""Core components for f-edge-color."""
