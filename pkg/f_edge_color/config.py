"""Configuration for f-edge-color.

Settings live in four sections (classifier, oracle, output, logging), each a
dataclass with its own ``validate()``. Files may be YAML or JSON; missing sections
and keys keep their defaults, unknown ones are rejected. Command-line flags override
file values; no environment variables are consulted.
"""

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Callable, Dict, Optional, TextIO, Type, TypeVar, Union

import yaml

from .core.oracle import ORACLE_EDGE_CAP
from .utils.validation import (
    ValidationError,
    validate_choice,
    validate_non_negative_int,
    validate_optional_budget,
    validate_positive_int,
)

OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("debug", "info", "warning", "error", "critical")
SECTION_NAMES = ("classifier", "oracle", "output", "logging")

PathLike = Union[str, Path]
_Section = TypeVar("_Section")


@dataclass
class ClassifierConfig:
    """Classifier pipeline limits."""

    exact_edge_limit: int = 24
    cut_budget: int = 1_000_000
    witness_budget: Optional[int] = 5_000_000
    exact_budget: Optional[int] = None

    def validate(self) -> None:
        validate_non_negative_int(self.exact_edge_limit, "exact_edge_limit")
        validate_positive_int(self.cut_budget, "cut_budget")
        validate_optional_budget(self.witness_budget, "witness_budget")
        validate_optional_budget(self.exact_budget, "exact_budget")


@dataclass
class OracleConfig:
    """Exact oracle limits; ``max_edges`` can only lower the hard cap."""

    max_edges: int = ORACLE_EDGE_CAP

    def validate(self) -> None:
        validate_positive_int(self.max_edges, "max_edges")
        if self.max_edges > ORACLE_EDGE_CAP:
            raise ValidationError(
                f"max_edges must be <= {ORACLE_EDGE_CAP}, got {self.max_edges}"
            )


@dataclass
class OutputConfig:
    """Report rendering."""

    format: str = "text"

    def validate(self) -> None:
        self.format = validate_choice(self.format, "format", OUTPUT_FORMATS)


@dataclass
class LoggingConfig:
    """Logging destination and level."""

    level: str = "WARNING"
    log_file: Optional[str] = None

    def validate(self) -> None:
        validate_choice(self.level, "level", LOG_LEVELS)


def _section(cls: Type[_Section], data: Any, name: str) -> _Section:
    if data is None:
        return cls()
    if not isinstance(data, dict):
        raise ValidationError(f"section '{name}' must be a mapping")
    known = {f.name for f in fields(cls)}  # type: ignore[arg-type]
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValidationError(f"unknown keys in section '{name}': {', '.join(unknown)}")
    return cls(**data)


def _load_document(
    path: PathLike, loader: Callable[[TextIO], Any], errors: Any, kind: str
) -> Any:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Configuration file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        try:
            return loader(f)
        except errors as e:
            raise ValidationError(f"Invalid {kind} in {path}: {e}") from e


class Config:
    """All settings of one run."""

    def __init__(
        self,
        classifier: Optional[ClassifierConfig] = None,
        oracle: Optional[OracleConfig] = None,
        output: Optional[OutputConfig] = None,
        logging: Optional[LoggingConfig] = None,
    ):
        self.classifier = classifier or ClassifierConfig()
        self.oracle = oracle or OracleConfig()
        self.output = output or OutputConfig()
        self.logging = logging or LoggingConfig()

    def validate(self) -> None:
        """Validate every section.

        Raises:
            ValidationError: On the first invalid value.
        """
        for name in SECTION_NAMES:
            getattr(self, name).validate()

    def to_dict(self) -> Dict[str, Any]:
        """Plain mapping of every section, in file order."""
        return {name: asdict(getattr(self, name)) for name in SECTION_NAMES}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Config":
        """Build and validate a Config from a parsed document.

        Raises:
            ValidationError: For unknown sections or keys and for invalid values.
        """
        unknown = sorted(set(data) - set(SECTION_NAMES))
        if unknown:
            raise ValidationError(f"unknown configuration sections: {', '.join(unknown)}")
        config = cls(
            classifier=_section(ClassifierConfig, data.get("classifier"), "classifier"),
            oracle=_section(OracleConfig, data.get("oracle"), "oracle"),
            output=_section(OutputConfig, data.get("output"), "output"),
            logging=_section(LoggingConfig, data.get("logging"), "logging"),
        )
        config.validate()
        return config

    @classmethod
    def from_yaml(cls, path: PathLike) -> "Config":
        """Load a YAML file; an empty file means all defaults.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValidationError: If the YAML is malformed or its root is not a mapping.
        """
        data = _load_document(path, yaml.safe_load, yaml.YAMLError, "YAML")
        if data is None:
            return cls()
        if not isinstance(data, dict):
            raise ValidationError(f"Configuration root must be a mapping: {path}")
        return cls.from_dict(data)

    @classmethod
    def from_json(cls, path: PathLike) -> "Config":
        """Load a JSON file.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValidationError: If the JSON is malformed or its root is not an object.
        """
        data = _load_document(path, json.load, json.JSONDecodeError, "JSON")
        if not isinstance(data, dict):
            raise ValidationError(f"Configuration root must be an object: {path}")
        return cls.from_dict(data)

    @classmethod
    def from_file(cls, path: PathLike) -> "Config":
        """Load ``.yaml``/``.yml`` or ``.json`` by suffix.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValidationError: For other suffixes or invalid content.
        """
        suffix = Path(path).suffix.lower()
        if suffix in (".yaml", ".yml"):
            return cls.from_yaml(path)
        if suffix == ".json":
            return cls.from_json(path)
        raise ValidationError(f"Unsupported configuration file format: {suffix}")
