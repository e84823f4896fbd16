"""The line-oriented ``.fgr`` instance format.

Grammar (``#`` starts a comment, blank lines are ignored, vertices are 1-based)::

    p fgraph <n> <m>
    f <f_1> ... <f_n>
    e <u> <v>          (exactly m lines)
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from ..core.errors import (
    DuplicateEdgeError,
    FgrSyntaxError,
    HeaderMismatchError,
    InstanceError,
    LoopEdgeError,
    NonPositiveFError,
    VertexOutOfRangeError,
)
from ..core.graph import FInstance, build_instance, normalize_edge

logger = logging.getLogger(__name__)


def _ints(tokens: List[str], line: int, what: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        message = f"{what} must be decimal integers: {' '.join(tokens)}"
        raise FgrSyntaxError(line, message) from None


def parse_fgr(text: str) -> FInstance:
    """Parse an ``.fgr`` document.

    Raises:
        FgrSyntaxError: Malformed or misplaced lines.
        HeaderMismatchError: Edge or f counts disagree with the header.
        LoopEdgeError, DuplicateEdgeError, VertexOutOfRangeError, NonPositiveFError:
            carrying the offending line number.
    """
    header: Optional[Tuple[int, int]] = None
    f_values: Optional[List[int]] = None
    f_line = 0
    edges: List[Tuple[int, int]] = []
    edge_lines: List[int] = []
    seen = {}
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        tag = tokens[0]

        if tag == "p":
            if header is not None:
                raise FgrSyntaxError(number, "duplicate 'p' line")
            if len(tokens) != 4 or tokens[1] != "fgraph":
                raise FgrSyntaxError(number, "header must read 'p fgraph <n> <m>'")
            n, m = _ints(tokens[2:], number, "header counts")
            if n < 0 or m < 0:
                raise FgrSyntaxError(number, "header counts must be non-negative")
            header = (n, m)
        elif tag == "f":
            if header is None:
                raise FgrSyntaxError(number, "'f' line before the 'p' header")
            if f_values is not None:
                raise FgrSyntaxError(number, "duplicate 'f' line")
            f_values = _ints(tokens[1:], number, "f values")
            f_line = number
            if len(f_values) != header[0]:
                raise HeaderMismatchError(
                    f"line {number}: f has {len(f_values)} values, header says n = {header[0]}"
                )
            for v, value in enumerate(f_values):
                if value < 1:
                    raise NonPositiveFError(f"f({v + 1}) = {value} is not positive", v, number)
        elif tag == "e":
            if header is None or f_values is None:
                raise FgrSyntaxError(number, "'e' line before the 'p' and 'f' lines")
            if len(tokens) != 3:
                raise FgrSyntaxError(number, "edge line must read 'e <u> <v>'")
            u, v = _ints(tokens[1:], number, "edge endpoints")
            index = len(edges)
            if index >= header[1]:
                raise HeaderMismatchError(
                    f"line {number}: more than the {header[1]} edges the header declares"
                )
            n = header[0]
            for endpoint in (u, v):
                if not 1 <= endpoint <= n:
                    raise VertexOutOfRangeError(
                        f"vertex {endpoint} outside 1..{n}", index, number
                    )
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}", index, number)
            key = normalize_edge(u - 1, v - 1)
            if key in seen:
                raise DuplicateEdgeError(
                    f"edge {u} {v} repeats line {seen[key]}", index, number
                )
            seen[key] = number
            edges.append((u - 1, v - 1))
            edge_lines.append(number)
        else:
            raise FgrSyntaxError(number, f"unknown line type {tag!r}")

    if header is None:
        raise FgrSyntaxError(last_line + 1, "missing 'p fgraph <n> <m>' header")
    if f_values is None:
        raise FgrSyntaxError(last_line + 1, "missing 'f' line")
    if len(edges) != header[1]:
        raise HeaderMismatchError(
            f"header declares {header[1]} edges, found {len(edges)}"
        )

    try:
        inst = build_instance(header[0], edges, f_values)
    except NonPositiveFError as e:
        raise e.at_line(f_line)
    except InstanceError as e:
        raise e.at_line(edge_lines[e.index] if 0 <= e.index < len(edge_lines) else 0)
    logger.debug("parsed instance: n=%d m=%d delta_f=%d", inst.n, inst.m, inst.delta_f)
    return inst


def serialize_fgr(inst: FInstance, comments: Iterable[str] = ()) -> str:
    """Render an instance as ``.fgr`` text with optional leading comment lines."""
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"p fgraph {inst.n} {inst.m}")
    lines.append(" ".join(["f"] + [str(x) for x in inst.f]))
    lines.extend(f"e {u + 1} {v + 1}" for u, v in inst.edges)
    return "\n".join(lines) + "\n"


def read_fgr(path: Union[str, Path]) -> FInstance:
    """Parse an ``.fgr`` file."""
    with open(path, "r", encoding="utf-8") as f:
        return parse_fgr(f.read())


def write_fgr(path: Union[str, Path], inst: FInstance, comments: Iterable[str] = ()) -> None:
    """Write an ``.fgr`` file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_fgr(inst, comments))
