"""Instance and coloring file formats."""
