"""Environment variable utilities."""
from __future__ import annotations

import os


def get_env_var(name: str, default: str | None = None) -> str | None:
    """Retrieve an optional environment variable with a default value.

    Args:
        name: Environment variable name
        default: Default value if variable is not set

    Returns:
        Environment variable value or default
    """
    return os.getenv(name, default)


def get_float_env_var(name: str, default: float) -> float:
    """Retrieve an optional numeric environment variable.

    Raises:
        RuntimeError: If the variable is set but is not a number
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError as e:
        raise RuntimeError(f"Environment variable {name} must be a number, got {raw!r}") from e


def get_int_env_var(name: str, default: int) -> int:
    """Retrieve an optional integer environment variable."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise RuntimeError(f"Environment variable {name} must be an integer, got {raw!r}") from e
