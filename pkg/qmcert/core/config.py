# qmcert/core/config.py
"""
Run configuration with a single env directory (config/env).
- Loads {QMCERT_ENV_DIR}/.env.{QMCERT_ENVIRONMENT} or falls back to {QMCERT_ENV_DIR}/.env
- Every field can be overridden by a QMCERT_-prefixed environment variable
- Ignores unknown keys from env-files (extra='ignore') so a shared .env works
"""

import os
from enum import Enum
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Environment(str, Enum):
    LOCAL = "local"
    CI = "ci"


def _compute_env_file() -> Optional[str]:
    """
    Pick env file based on QMCERT_ENVIRONMENT and QMCERT_ENV_DIR.
    Order:
      1) {ENV_DIR}/.env.{ENVIRONMENT}
      2) {ENV_DIR}/.env
    """
    env = os.getenv("QMCERT_ENVIRONMENT", "local").lower()
    env_dir = os.getenv("QMCERT_ENV_DIR", "config/env")
    candidates = [
        os.path.join(env_dir, f".env.{env}"),
        os.path.join(env_dir, ".env"),
    ]
    for path in candidates:
        if os.path.exists(path):
            return path
    return None


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        case_sensitive=True,
        env_ignore_empty=True,
        extra="ignore",
        env_prefix="QMCERT_",
    )

    ENVIRONMENT: Environment = Field(default=Environment.LOCAL)

    # Series precision, in units of q^(1/2)
    DEFAULT_PREC: int = Field(default=240)
    SCAN_ORDER: int = Field(default=200)

    # Numeric evaluation
    EVAL_DPS: int = Field(default=60)
    EVAL_TOL: float = Field(default=1e-30)
    SCAN_TOL: float = Field(default=1e-9)
    GRID_POINTS: int = Field(default=128)
    LIMIT_T: float = Field(default=8.0)

    # Suite sizes
    KKD1_MAX_WEIGHT: int = Field(default=120)
    POSITIVITY_MAX_WEIGHT: int = Field(default=60)

    LOG_LEVEL: str = Field(default="INFO")

    @field_validator("DEFAULT_PREC", "SCAN_ORDER", "GRID_POINTS")
    @classmethod
    def _positive(cls, v: int) -> int:
        if v <= 0:
            raise ValueError(f"must be positive, got {v}")
        return v

    @field_validator("KKD1_MAX_WEIGHT")
    @classmethod
    def _multiple_of_six(cls, v: int) -> int:
        if v < 12 or v % 6:
            raise ValueError(f"KKD1_MAX_WEIGHT must be a multiple of 6 and >= 12, got {v}")
        return v


class LocalConfig(Settings):
    ENVIRONMENT: Environment = Environment.LOCAL


class CiConfig(Settings):
    ENVIRONMENT: Environment = Environment.CI
    LOG_LEVEL: str = "WARNING"


def get_settings() -> Settings:
    env = os.getenv("QMCERT_ENVIRONMENT", "local").lower()
    configs = {
        "local": LocalConfig,
        "ci": CiConfig,
    }
    config_class = configs.get(env, LocalConfig)
    env_file = _compute_env_file()
    if env_file:
        return config_class(_env_file=env_file, _env_file_encoding="utf-8")
    return config_class()


# Global settings instance
settings = get_settings()
