"""Configuration management for Cosmicode."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

import structlog
from platformdirs import user_config_dir, user_data_dir

from cosmicode.physics.constants import PhysicalConstants, load_constants

log = structlog.get_logger()

APP_NAME = "cosmicode"
SCENARIO_DIR_ENV = "COSMICODE_SCENARIO_DIR"


def get_config_dir() -> Path:
    """Get the configuration directory."""
    return Path(user_config_dir(APP_NAME))


def get_data_dir() -> Path:
    """Get the data directory."""
    return Path(user_data_dir(APP_NAME))


def get_scenario_dir() -> Path:
    """Default scenario directory, overridable through the environment."""
    override = os.environ.get(SCENARIO_DIR_ENV)
    if override:
        return Path(override).expanduser()
    return get_data_dir() / "scenarios"


@dataclass
class Config:
    """Application configuration."""

    # Paths
    config_dir: Path = field(default_factory=get_config_dir)
    data_dir: Path = field(default_factory=get_data_dir)
    scenario_dir: Path = field(default_factory=get_scenario_dir)

    # Sweeps
    max_workers: int = 4

    @property
    def settings_path(self) -> Path:
        """Path to user settings file."""
        return self.config_dir / "settings.json"

    @property
    def constants_path(self) -> Path:
        """Path to the user's constants document."""
        return self.config_dir / "constants.json"

    @property
    def output_dir(self) -> Path:
        """Where sweep reports go by default."""
        return self.data_dir / "reports"

    def resolve_scenario(self, path: Path) -> Path:
        """Return path as given, or inside scenario_dir when it only exists there."""
        if path.exists() or path.is_absolute():
            return path
        candidate = self.scenario_dir / path
        return candidate if candidate.exists() else path

    def load_constants(self) -> PhysicalConstants:
        """User constants when constants.json exists, otherwise the defaults."""
        if not self.constants_path.exists():
            return PhysicalConstants()
        constants = load_constants(self.constants_path.read_bytes())
        log.debug("User constants loaded", path=str(self.constants_path))
        return constants

    @classmethod
    def load(cls) -> Config:
        """Load configuration from disk."""
        config = cls()
        if config.settings_path.exists():
            try:
                settings = json.loads(config.settings_path.read_text())
                if "scenario_dir" in settings and not os.environ.get(SCENARIO_DIR_ENV):
                    config.scenario_dir = Path(settings["scenario_dir"]).expanduser()
                config.max_workers = int(settings.get("max_workers", 4))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                log.warning(
                    "Ignoring malformed settings", path=str(config.settings_path), error=str(e)
                )
        return config


_config: Config | None = None


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = Config.load()
    return _config

