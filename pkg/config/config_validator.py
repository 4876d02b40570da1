"""
Configuration Loader with Fail-Fast Validation

Loads config/defaults.yaml (or a file passed with --config) and validates it
against typed pydantic models. Any missing key, wrong type or out-of-range
value raises ConfigurationError before a command runs.

Design Principles:
- Fail-fast: invalid config = immediate failure at startup
- Type-safe: pydantic models for all config structures
- Single source of truth: defaults.yaml
"""

from pathlib import Path
from typing import List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic import ValidationError as PydanticValidationError
from sympy import isprime

from core.exceptions import ConfigurationError

DEFAULT_CONFIG_PATH = Path(__file__).parent / "defaults.yaml"


class _Section(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


# =============================================================================
# CONFIGURATION MODELS
# =============================================================================


class LoggingConfig(_Section):
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    format: Literal["text", "json"] = "text"

    @field_validator("level", mode="before")
    @classmethod
    def _upper(cls, value: str) -> str:
        return value.upper() if isinstance(value, str) else value


class OracleConfig(_Section):
    brute_force_limit: int = Field(..., gt=0)
    allowed_primes: List[int] = Field(..., min_length=1)
    chunk_size: int = Field(..., gt=0)
    workers: int = Field(..., ge=1, le=64)
    root_search_primes: List[int] = Field(..., min_length=1)

    @field_validator("allowed_primes", "root_search_primes")
    @classmethod
    def _primes_only(cls, values: List[int]) -> List[int]:
        composite = [p for p in values if not isprime(p)]
        if composite:
            raise ValueError(f"not prime: {composite}")
        return values


class ConcordanceConfig(_Section):
    corpus_size: int = Field(..., ge=1)
    max_variables: int = Field(..., ge=1)
    max_degree: int = Field(..., ge=1)
    max_terms: int = Field(..., ge=1)
    algebra_sizes: List[int] = Field(..., min_length=1)


class MinimalityConfig(_Section):
    sizes: List[int] = Field(..., min_length=1)


class DimensionConfig(_Section):
    max_n: int = Field(..., ge=1)
    max_m: int = Field(..., ge=1)


class CodimensionConfig(_Section):
    max_m: int = Field(..., ge=1)


class TrichotomyConfig(_Section):
    corpus_size: int = Field(..., ge=1)
    max_variables: int = Field(..., ge=1)
    max_n: int = Field(..., ge=1)
    primes: List[int] = Field(..., min_length=1)


class HomogeneousConfig(_Section):
    corpus_size: int = Field(..., ge=1)
    max_degree: int = Field(..., ge=1)
    max_variables: int = Field(..., ge=1)
    max_n: int = Field(..., ge=1)
    primes: List[int] = Field(..., min_length=1)


class PreimageConfig(_Section):
    targets: int = Field(..., ge=1)
    max_degree: int = Field(..., ge=1)
    max_variables: int = Field(..., ge=1)
    max_n: int = Field(..., ge=2)


class ClosedFormConfig(_Section):
    right_power_cases: int = Field(..., ge=1)
    evaluation_cases: int = Field(..., ge=1)
    max_n: int = Field(..., ge=2)


class RootExponentConfig(_Section):
    instances: int = Field(..., ge=20)


class VerificationConfig(_Section):
    seed: int
    concordance: ConcordanceConfig
    minimality: MinimalityConfig
    dimension: DimensionConfig
    codimension: CodimensionConfig
    trichotomy: TrichotomyConfig
    homogeneous: HomogeneousConfig
    preimage: PreimageConfig
    closed_form: ClosedFormConfig
    root_exponent: RootExponentConfig


class EngineConfig(_Section):
    """Root of the configuration file."""

    logging: LoggingConfig = LoggingConfig()
    oracle: OracleConfig
    verification: VerificationConfig


# =============================================================================
# LOADING
# =============================================================================


def load_config(path: Optional[Union[str, Path]] = None) -> EngineConfig:
    """
    Load and validate a configuration file.

    Args:
        path: YAML file; defaults to the packaged defaults.yaml

    Returns:
        EngineConfig: Validated, immutable configuration

    Raises:
        ConfigurationError: file missing, unreadable, or invalid
    """
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not config_path.is_file():
        raise ConfigurationError(
            f"Configuration file not found: {config_path}", details={"path": str(config_path)}
        )
    try:
        with config_path.open("r", encoding="utf-8") as handle:
            raw = yaml.safe_load(handle)
    except yaml.YAMLError as exc:
        raise ConfigurationError(
            f"Invalid YAML in {config_path}: {exc}", details={"path": str(config_path)}
        ) from exc
    if not isinstance(raw, dict):
        raise ConfigurationError(
            f"Configuration root must be a mapping: {config_path}",
            details={"path": str(config_path)},
        )
    try:
        return EngineConfig.model_validate(raw)
    except PydanticValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ConfigurationError(
            f"Invalid configuration at {location}: {first['msg']}",
            details={"path": str(config_path), "errors": exc.error_count()},
        ) from exc
