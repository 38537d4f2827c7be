"""
Configuration module for qeulerian.
Exposes settings as upper-case module constants.
Uses __getattr__ for lazy loading to avoid circular imports.
"""
from typing import Any

# Lazy import to avoid circular dependencies
_settings = None


def _get_settings():
    """Get settings instance (lazy import)."""
    global _settings
    if _settings is None:
        from .core.settings import get_settings
        _settings = get_settings()
    return _settings


# Configuration variable mapping
_CONFIG_MAP = {
    # Application
    'LOG_LEVEL': lambda s: s.log_level,
    'THREADS': lambda s: s.threads,
    'CACHE_MAX_ENTRIES': lambda s: s.cache_max_entries,

    # Verification policy
    'DEFAULT_N_MAX': lambda s: s.verify.n_max,
    'DEFAULT_SEED': lambda s: s.verify.seed,
    'DEFAULT_SAMPLES': lambda s: s.verify.sample_count,
    'EXHAUSTIVE_GRID_MAX_N': lambda s: s.verify.exhaustive_grid_max_n,
    'ORBIT_CHECK_MAX_N': lambda s: s.verify.orbit_check_max_n,

    # Enumeration guards
    'ENUMERATION_MAX_N': lambda s: s.enumeration.max_n,
    'EULER_MAX_N': lambda s: s.enumeration.euler_max_n,
}

# Cache for computed values
_config_cache: dict[str, Any] = {}


def reset_config():
    """Drop cached values so the next access re-reads settings."""
    global _settings
    from .core.settings import reset_settings
    reset_settings()
    _settings = None
    _config_cache.clear()


def __getattr__(name: str) -> Any:
    """
    Lazy loading of configuration variables.

    Args:
        name: Configuration variable name

    Returns:
        Configuration value
    """
    if name in _CONFIG_MAP:
        if name not in _config_cache:
            _config_cache[name] = _CONFIG_MAP[name](_get_settings())
        return _config_cache[name]
    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")
