"""Configuration management with YAML defaults and environment overrides."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

from .exceptions import ConfigError
from .logger import get_logger

logger = get_logger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


@dataclass
class SearchConfig:
    """Exhaustive search and random-walk sweep settings."""
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)
    max_exhaustive_n: int = 9
    prune_symmetry: bool = False
    seed: int = 0
    trials: int = 1000


@dataclass
class SequenceConfig:
    """Sequence-pair lab settings."""
    max_k: int = 4
    max_T: int = 12
    residual_tolerance: float = 1e-9


@dataclass
class OutputConfig:
    """Output format settings."""
    format: str = "json"  # json | text | csv
    jsonl: bool = False


@dataclass
class LoggingConfig:
    """Logging settings."""
    level: str = "WARNING"
    log_dir: Optional[str] = None


@dataclass
class Config:
    """Main configuration container."""
    search: SearchConfig = field(default_factory=SearchConfig)
    sequences: SequenceConfig = field(default_factory=SequenceConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    source: Optional[Path] = None

    @classmethod
    def load(cls, path: Optional[str] = None) -> "Config":
        """
        Load configuration from a YAML file and the environment.

        Args:
            path: YAML file (default: config/settings.yaml when present)

        Returns:
            Populated Config instance
        """
        load_dotenv()

        config = cls()
        yaml_path = Path(path) if path else Path("config/settings.yaml")
        if path and not yaml_path.exists():
            raise ConfigError(f"Config file not found: {yaml_path}")
        if yaml_path.exists():
            config.source = yaml_path
            config._apply(config._read_yaml(yaml_path))

        if os.getenv("RSKLAB_WORKERS"):
            try:
                config.search.workers = int(os.environ["RSKLAB_WORKERS"])
            except ValueError:
                raise ConfigError(f"RSKLAB_WORKERS is not an integer: {os.environ['RSKLAB_WORKERS']}")
        if os.getenv("RSKLAB_LOG_LEVEL"):
            config.logging.level = os.environ["RSKLAB_LOG_LEVEL"].upper()

        logger.debug(f"Config loaded from {config.source or 'defaults'}")
        return config

    def _apply(self, data: Dict[str, Any]) -> None:
        """Overlay YAML sections onto the dataclass defaults."""
        sections = {
            "search": self.search,
            "sequences": self.sequences,
            "output": self.output,
            "logging": self.logging,
        }
        for name, values in data.items():
            section = sections.get(name)
            if section is None:
                raise ConfigError(f"Unknown config section: {name}")
            for key, value in (values or {}).items():
                if not hasattr(section, key):
                    raise ConfigError(f"Unknown config key: {name}.{key}")
                setattr(section, key, value)

    def _read_yaml(self, path: Path) -> Dict[str, Any]:
        """Read and parse a YAML file."""
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"Failed to load {path}: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"{path} must contain a mapping")
        return data

    def override(self, **flags: Any) -> "Config":
        """Apply command-line flags on top (``None`` means not given)."""
        mapping = {
            "workers": (self.search, "workers"),
            "prune": (self.search, "prune_symmetry"),
            "seed": (self.search, "seed"),
            "trials": (self.search, "trials"),
            "format": (self.output, "format"),
            "jsonl": (self.output, "jsonl"),
            "log_level": (self.logging, "level"),
        }
        for key, value in flags.items():
            if value is None or key not in mapping:
                continue
            section, attr = mapping[key]
            setattr(section, attr, value)
        return self

    def validate(self) -> List[str]:
        """Return a list of configuration problems (empty when valid)."""
        errors = []

        if self.search.workers < 1:
            errors.append(f"search.workers must be >= 1, got {self.search.workers}")
        if self.search.trials < 1:
            errors.append(f"search.trials must be >= 1, got {self.search.trials}")
        if self.sequences.residual_tolerance <= 0:
            errors.append("sequences.residual_tolerance must be positive")
        if self.output.format not in ["json", "text", "csv"]:
            errors.append(f"Invalid output format: {self.output.format}")
        if self.logging.level.upper() not in LOG_LEVELS:
            errors.append(f"Invalid log level: {self.logging.level}")

        for error in errors:
            logger.error(f"Config validation: {error}")
        return errors
