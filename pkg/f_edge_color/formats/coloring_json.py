"""Coloring documents: ``{"k": k, "edges": [[u, v, c], ...]}`` with 1-based vertices."""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..core.coloring import FColoring
from ..core.errors import ColoringFormatError
from ..core.graph import normalize_edge


def dumps_stable(payload: Any) -> str:
    """JSON text in insertion order, newline terminated."""
    return json.dumps(payload) + "\n"


def serialize_coloring_json(col: FColoring) -> str:
    """Serialize a coloring; edges are listed in edge order."""
    return dumps_stable(col.to_dict())


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_coloring_json(text: str, n: Optional[int] = None) -> FColoring:
    """Parse a coloring document.

    Args:
        text: JSON text.
        n: Vertex count used to range-check endpoints, when known.

    Raises:
        ColoringFormatError: On malformed JSON, wrong shapes, bad vertices or repeats.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ColoringFormatError(f"invalid JSON: {e}") from e
    if not isinstance(data, dict) or "k" not in data or "edges" not in data:
        raise ColoringFormatError('coloring must be an object with "k" and "edges"')
    k = data["k"]
    if not _is_int(k) or k < 0:
        raise ColoringFormatError(f'"k" must be a non-negative integer, got {k!r}')
    if not isinstance(data["edges"], list):
        raise ColoringFormatError('"edges" must be a list')

    assignment: Dict = {}
    for i, row in enumerate(data["edges"]):
        if not isinstance(row, list) or len(row) != 3 or not all(_is_int(x) for x in row):
            raise ColoringFormatError(f"edge entry {i} must be [u, v, color], got {row!r}")
        u, v, c = row
        for endpoint in (u, v):
            if endpoint < 1 or (n is not None and endpoint > n):
                raise ColoringFormatError(f"edge entry {i} names vertex {endpoint} out of range")
        if u == v:
            raise ColoringFormatError(f"edge entry {i} is a loop at vertex {u}")
        key = normalize_edge(u - 1, v - 1)
        if key in assignment:
            raise ColoringFormatError(f"edge entry {i} repeats edge {u} {v}")
        assignment[key] = c
    return FColoring(k, assignment)


def read_coloring_json(path: Union[str, Path], n: Optional[int] = None) -> FColoring:
    with open(path, "r", encoding="utf-8") as f:
        return parse_coloring_json(f.read(), n)


def write_coloring_json(path: Union[str, Path], col: FColoring) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_coloring_json(col))
