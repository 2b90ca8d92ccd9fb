"""Shared utility functions."""
from .env import get_env_var, get_float_env_var, get_int_env_var
from .validation import (
    DomainError,
    FileFormatError,
    PMSpaceError,
    SpaceAxiomError,
    UnsupportedCombinationError,
)

__all__ = [
    "get_env_var",
    "get_float_env_var",
    "get_int_env_var",
    "DomainError",
    "FileFormatError",
    "PMSpaceError",
    "SpaceAxiomError",
    "UnsupportedCombinationError",
]
