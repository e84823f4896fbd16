"""Exception hierarchy for f-edge-color.

Every failure raised by the library derives from :class:`FColoringError` so the CLI
can map library errors to a single exit code.
"""

from typing import Optional


class FColoringError(Exception):
    """Base class for all library errors."""

    pass


class InstanceError(FColoringError):
    """Raised when an instance is malformed.

    Attributes:
        index: Offending edge index (edge errors) or vertex index (f errors).
        line: 1-based source line when the instance came from a file.
    """

    def __init__(self, message: str, index: int, line: Optional[int] = None):
        self.message = message
        self.index = index
        self.line = line
        super().__init__(self._render())

    def _render(self) -> str:
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message

    def at_line(self, line: int) -> "InstanceError":
        """Attach a source line number and return self for re-raising."""
        self.line = line
        self.args = (self._render(),)
        return self


class LoopEdgeError(InstanceError):
    """Raised when an edge joins a vertex to itself."""

    pass


class DuplicateEdgeError(InstanceError):
    """Raised when the same unordered pair appears twice."""

    pass


class VertexOutOfRangeError(InstanceError):
    """Raised when an edge names a vertex outside 0..n-1."""

    pass


class NonPositiveFError(InstanceError):
    """Raised when f(v) < 1 or f has the wrong length."""

    pass


class EmptyGraphError(FColoringError):
    """Raised when an operation needs at least one edge."""

    pass


class DisconnectedError(FColoringError):
    """Raised when an operation needs a connected instance."""

    pass


class PreconditionError(FColoringError):
    """Raised when a caller violates an operation's precondition."""

    pass


class CoverageMismatchError(FColoringError):
    """Raised when a coloring does not cover exactly the expected edge set."""

    pass


class NotBipartiteError(FColoringError):
    """Raised when a supplied bipartition is not valid for the graph."""

    pass


class InternalExtensionFailure(FColoringError):
    """Raised when one-edge extension fails although its hypothesis holds."""

    pass


class TooLargeError(FColoringError):
    """Raised when an exhaustive operation is asked to run past its hard cap."""

    pass


class InternalInconsistencyError(FColoringError):
    """Raised when exact search and the constructive bound disagree."""

    pass


class FgrSyntaxError(FColoringError):
    """Raised when an .fgr document cannot be tokenized."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class HeaderMismatchError(FColoringError):
    """Raised when an .fgr body disagrees with its header counts."""

    pass


class ColoringFormatError(FColoringError):
    """Raised when a coloring JSON document is malformed."""

    pass


class UnknownFamilyError(FColoringError):
    """Raised for an unknown generator family name."""

    pass


class BadParamsError(FColoringError):
    """Raised when generator parameters or an f spec are invalid."""

    pass
