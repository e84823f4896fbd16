"""Entry point for the f-edge-color CLI."""

from f_edge_color.cli import cli


if __name__ == "__main__":
    cli()
