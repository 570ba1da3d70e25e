"""Configuration management for cartprod."""
import os
from dataclasses import dataclass, fields
from typing import Optional

from . import defaults
from .errors import ConfigError


@dataclass
class CartprodConfig:
    """Runtime configuration shared by every operation."""
    capacity: int = defaults.CAPACITY
    jacobi_tol: float = defaults.JACOBI_TOL
    max_sweeps: int = defaults.MAX_SWEEPS
    symmetry_tol: float = defaults.SYMMETRY_TOL

    # Verification campaigns
    entry_bound: int = defaults.ENTRY_BOUND
    injection_rate: float = defaults.INJECTION_RATE
    counterexample_cap: int = defaults.COUNTEREXAMPLE_CAP

    def __post_init__(self) -> None:
        if self.capacity < 1:
            raise ConfigError(f"capacity must be positive, got {self.capacity}")
        if self.max_sweeps < 1:
            raise ConfigError(f"max_sweeps must be positive, got {self.max_sweeps}")
        if not 0.0 <= self.injection_rate <= 1.0:
            raise ConfigError(f"injection_rate must lie in [0, 1], got {self.injection_rate}")

    def allows(self, entry_count: int) -> bool:
        """Check if a matrix with this many entries fits under the capacity guard."""
        return entry_count <= self.capacity


# Global config instance
_config: Optional[CartprodConfig] = None


def capacity_from_env() -> Optional[int]:
    """Read the capacity override from the environment, if set."""
    raw = os.environ.get(defaults.CAPACITY_ENV_VAR)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{defaults.CAPACITY_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{defaults.CAPACITY_ENV_VAR} must be positive, got {value}")
    return value


def get_config() -> CartprodConfig:
    """Get the global config instance."""
    global _config
    if _config is None:
        _config = init_config()
    return _config


def init_config(**overrides) -> CartprodConfig:
    """Initialize config from defaults, the environment and explicit overrides.

    Overrides whose value is ``None`` are ignored so CLI arguments can be
    passed straight through.
    """
    global _config

    known = {f.name for f in fields(CartprodConfig)}
    unknown = set(overrides) - known
    if unknown:
        raise ConfigError(f"Unknown config fields: {', '.join(sorted(unknown))}")

    settings = {}
    env_capacity = capacity_from_env()
    if env_capacity is not None:
        settings["capacity"] = env_capacity
    settings.update({k: v for k, v in overrides.items() if v is not None})

    _config = CartprodConfig(**settings)
    return _config


def reset_config() -> None:
    """Drop the global instance so the next get_config() rebuilds it."""
    global _config
    _config = None
