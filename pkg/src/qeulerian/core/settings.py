"""
Pydantic Settings for type-safe configuration.
Values come from the environment (QEULERIAN_* variables) or a .env file.
"""
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator


class VerifySettings(BaseSettings):
    """Default verification policy."""

    n_max: int = Field(default=6, ge=1, le=10, description='Largest size')
    seed: int = Field(default=20240501, description='Sampler seed')
    sample_count: int = Field(
        default=25, ge=1, le=10000, description='Random schemes per check'
    )
    exhaustive_grid_max_n: int = Field(
        default=4, ge=1, le=6, description='Largest n for grid mode'
    )
    orbit_check_max_n: int = Field(
        default=6, ge=1, le=10, description='Largest n for marked orbit sweeps'
    )

    model_config = SettingsConfigDict(
        env_prefix='QEULERIAN_VERIFY_',
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        extra='ignore'
    )


class EnumerationSettings(BaseSettings):
    """Permutation enumeration guards."""

    max_n: int = Field(
        default=10, ge=0, le=10, description='Largest enumerated size'
    )
    euler_max_n: int = Field(
        default=12, ge=0, le=12, description='Largest Euler number index'
    )

    model_config = SettingsConfigDict(
        env_prefix='QEULERIAN_ENUM_',
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        extra='ignore'
    )


class AppSettings(BaseSettings):
    """Main application settings."""

    log_level: str = Field(default='WARNING', description='Log level')
    threads: int = Field(
        default=1, ge=1, le=256, description='Parallel verification workers'
    )
    cache_max_entries: int = Field(
        default=4096, ge=16, description='In-memory cache capacity'
    )

    # Sub-settings
    verify: VerifySettings = Field(default_factory=VerifySettings)
    enumeration: EnumerationSettings = Field(
        default_factory=EnumerationSettings
    )

    model_config = SettingsConfigDict(
        env_prefix='QEULERIAN_',
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        extra='ignore'
    )

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level."""
        allowed = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
        if v.upper() not in allowed:
            raise ValueError(f"Log level must be one of {allowed}")
        return v.upper()


# Global settings instance
_settings: Optional[AppSettings] = None


def get_settings() -> AppSettings:
    """
    Get global settings instance (singleton pattern).

    Returns:
        AppSettings instance
    """
    global _settings
    if _settings is None:
        _settings = AppSettings()
    return _settings


def reset_settings():
    """Reset global settings (useful for testing)."""
    global _settings
    _settings = None
