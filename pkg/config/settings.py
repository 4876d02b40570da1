"""
Application Settings

Typed, immutable access to the validated configuration file. No environment
variables are consulted: identical invocations must behave identically.

Layer: Configuration
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from config.config_validator import (
    DEFAULT_CONFIG_PATH,
    EngineConfig,
    LoggingConfig,
    OracleConfig,
    VerificationConfig,
    load_config,
)


@dataclass(frozen=True)
class Settings:
    """
    Engine configuration settings.

    Wraps the validated EngineConfig and records where it came from.
    """

    config: EngineConfig
    source: Path = DEFAULT_CONFIG_PATH

    app_name: str = "nullfil"
    app_version: str = "1.0.0"

    @classmethod
    def from_file(cls, path: Optional[Union[str, Path]] = None) -> "Settings":
        """
        Load settings from a YAML file (the packaged defaults when path is None).

        Returns:
            Settings: Configured instance
        """
        source = Path(path) if path is not None else DEFAULT_CONFIG_PATH
        return cls(config=load_config(source), source=source)

    @property
    def logging(self) -> LoggingConfig:
        return self.config.logging

    @property
    def oracle(self) -> OracleConfig:
        return self.config.oracle

    @property
    def verification(self) -> VerificationConfig:
        return self.config.verification


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get the settings singleton, loading the packaged defaults on first use.

    Returns:
        Settings: Engine configuration
    """
    global _settings
    if _settings is None:
        _settings = Settings.from_file()
    return _settings


def reload_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """
    Reload settings, optionally from another file.
    Used by the --config flag and by tests.

    Returns:
        Settings: Reloaded configuration
    """
    global _settings
    _settings = Settings.from_file(path)
    return _settings
