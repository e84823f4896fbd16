"""Test suite for f-edge-color."""
