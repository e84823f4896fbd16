"""Logging setup for f-edge-color.

Records go to stderr, and optionally to a file, so that stdout only ever carries
JSON, DOT and .fgr payloads. Long-running searches log through a
:class:`ContextLogger` that tags every record with the instance being worked on,
e.g. ``[n=6 m=10 delta_f=3]``.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class ContextLogger(logging.LoggerAdapter):
    """Adapter that prefixes every message with ``[key=value ...]``.

    Keys keep the order of the context mapping.
    """

    def __init__(self, logger: logging.Logger, extra: Optional[Dict[str, Any]] = None):
        super().__init__(logger, extra or {})
        pairs = " ".join(f"{key}={value}" for key, value in self.extra.items())
        self.prefix = f"[{pairs}] " if pairs else ""

    def process(self, msg: str, kwargs: Any) -> tuple:
        """Return the prefixed message; ``kwargs`` pass through untouched."""
        return f"{self.prefix}{msg}", kwargs


def _attach(root: logging.Logger, handler: logging.Handler, level: int) -> None:
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
    root.addHandler(handler)


def setup_logging(
    level: str = "WARNING",
    log_file: Optional[str] = None,
    verbose: bool = False,
    log_to_console: bool = True,
) -> logging.Logger:
    """Replace the root logger's handlers with stderr and/or file handlers.

    Args:
        level: Level name, case-insensitive; unknown names fall back to WARNING.
        log_file: Extra destination; missing parent directories are created.
        verbose: Force DEBUG regardless of ``level``.
        log_to_console: Attach a stderr handler.

    Returns:
        The root logger.
    """
    numeric = logging.DEBUG if verbose else getattr(logging, level.upper(), logging.WARNING)

    root = logging.getLogger()
    root.setLevel(numeric)
    root.handlers.clear()

    handlers: List[logging.Handler] = []
    if log_to_console:
        handlers.append(logging.StreamHandler(sys.stderr))
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
    for handler in handlers:
        _attach(root, handler, numeric)
    return root


def get_logger(
    name: str, context: Optional[Dict[str, Any]] = None
) -> Union[logging.Logger, ContextLogger]:
    """Module logger, wrapped in a :class:`ContextLogger` when ``context`` is non-empty."""
    base = logging.getLogger(name)
    return ContextLogger(base, context) if context else base
