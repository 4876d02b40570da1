"""
Configuration Module

Centralized configuration for the nullfil engine.

Usage:
    from config import get_settings

    settings = get_settings()
    limit = settings.oracle.brute_force_limit
"""

from config.config_validator import EngineConfig, load_config
from config.settings import Settings, get_settings, reload_settings

__all__ = [
    "EngineConfig",
    "Settings",
    "get_settings",
    "load_config",
    "reload_settings",
]
