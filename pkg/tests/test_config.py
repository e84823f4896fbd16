"""Tests for configuration loading and validation."""

import json

import pytest
import yaml

from f_edge_color.config import (
    ORACLE_EDGE_CAP,
    ClassifierConfig,
    Config,
    OracleConfig,
    OutputConfig,
)
from f_edge_color.core.classifier import ClassifyOptions
from f_edge_color.utils.validation import ValidationError


class TestDefaults:
    """Tests for default values."""

    def test_defaults(self):
        """Test an empty config carries the documented defaults."""
        config = Config()
        assert config.classifier.exact_edge_limit == 24
        assert config.classifier.cut_budget == 1_000_000
        assert config.classifier.exact_budget is None
        assert config.oracle.max_edges == ORACLE_EDGE_CAP
        assert config.output.format == "text"
        assert config.logging.log_file is None

    def test_default_options_match(self):
        """Test classifier options built from defaults equal the plain defaults."""
        assert ClassifyOptions.from_config(ClassifierConfig()) == ClassifyOptions()

    def test_to_dict_sections(self):
        """Test to_dict lists every section."""
        assert list(Config().to_dict()) == ["classifier", "oracle", "output", "logging"]


class TestFromDict:
    """Tests for Config.from_dict."""

    def test_partial_sections(self):
        """Test missing keys and sections keep their defaults."""
        config = Config.from_dict({"classifier": {"exact_edge_limit": 12}})
        assert config.classifier.exact_edge_limit == 12
        assert config.classifier.cut_budget == 1_000_000
        assert config.output.format == "text"

    def test_format_is_lowercased(self):
        """Test the output format is normalized."""
        assert Config.from_dict({"output": {"format": "JSON"}}).output.format == "json"

    @pytest.mark.parametrize(
        "data,match",
        [
            ({"metrics": {}}, "metrics"),
            ({"classifier": {"speed": 1}}, "speed"),
            ({"classifier": []}, "mapping"),
            ({"classifier": {"exact_edge_limit": -1}}, "exact_edge_limit"),
            ({"classifier": {"cut_budget": 0}}, "cut_budget"),
            ({"classifier": {"witness_budget": "many"}}, "witness_budget"),
            ({"oracle": {"max_edges": ORACLE_EDGE_CAP + 1}}, "max_edges"),
            ({"output": {"format": "xml"}}, "format"),
            ({"logging": {"level": "loud"}}, "level"),
        ],
    )
    def test_invalid(self, data, match):
        """Test malformed sections raise ValidationError naming the key."""
        with pytest.raises(ValidationError, match=match):
            Config.from_dict(data)


class TestFiles:
    """Tests for loading config files."""

    def test_yaml_file(self, tmp_path):
        """Test a YAML document written from to_dict loads back with the same values."""
        config = Config(
            classifier=ClassifierConfig(exact_edge_limit=10, exact_budget=500),
            oracle=OracleConfig(max_edges=20),
            output=OutputConfig(format="json"),
        )
        path = tmp_path / "config.yaml"
        path.write_text(yaml.safe_dump(config.to_dict(), sort_keys=False))
        assert Config.from_file(path).to_dict() == config.to_dict()

    def test_json_file(self, tmp_path):
        """Test a JSON document with one section keeps defaults elsewhere."""
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"classifier": {"cut_budget": 99}}))
        config = Config.from_file(path)
        assert config.classifier.cut_budget == 99
        assert config.oracle.max_edges == ORACLE_EDGE_CAP

    def test_empty_yaml(self, tmp_path):
        """Test an empty YAML file means all defaults."""
        path = tmp_path / "empty.yml"
        path.write_text("")
        assert Config.from_file(path).to_dict() == Config().to_dict()

    def test_missing_file(self, tmp_path):
        """Test a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError, match="Configuration file not found"):
            Config.from_file(tmp_path / "absent.yaml")

    def test_unsupported_suffix(self, tmp_path):
        """Test only YAML and JSON files are accepted."""
        path = tmp_path / "config.toml"
        path.write_text("")
        with pytest.raises(ValidationError, match="Unsupported"):
            Config.from_file(path)

    @pytest.mark.parametrize(
        "name,text",
        [
            ("bad.yaml", "classifier: [unclosed"),
            ("list.yaml", "- 1\n- 2\n"),
            ("bad.json", "{"),
            ("list.json", "[]"),
        ],
    )
    def test_malformed_file(self, tmp_path, name, text):
        """Test malformed or non-mapping documents raise ValidationError."""
        path = tmp_path / name
        path.write_text(text)
        with pytest.raises(ValidationError):
            Config.from_file(path)
