"""Argument validation and the package exception hierarchy."""
from __future__ import annotations

import math
from typing import Any, Sized


class PMSpaceError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(PMSpaceError, ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedCombinationError(DomainError):
    """A triangle function was requested over a t-norm it cannot be built from."""


class FileFormatError(PMSpaceError):
    """A d.d.f. or space document could not be parsed or has the wrong shape."""

    def __init__(self, path: str, location: str, message: str):
        self.path = path
        self.location = location
        self.message = message
        super().__init__(f"{path}: {location}: {message}" if location else f"{path}: {message}")


class SpaceAxiomError(PMSpaceError):
    """A space document describes data violating the PM space axioms."""

    def __init__(self, message: str, report: Any):
        self.report = report
        super().__init__(message)


def require_positive(name: str, value: float) -> float:
    """Require a strictly positive real number.

    Raises:
        DomainError: If value is NaN or not greater than zero
    """
    if math.isnan(value) or value <= 0:
        raise DomainError(f"{name} must be > 0, got {value!r}")
    return value


def require_unit_interval(name: str, value: float) -> float:
    """Require a value in [0, 1]."""
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def require_open_unit_interval(name: str, value: float) -> float:
    """Require a value in (0, 1)."""
    if math.isnan(value) or not 0.0 < value < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {value!r}")
    return value


def require_half_open_unit_interval(name: str, value: float) -> float:
    """Require a value in (0, 1]."""
    if math.isnan(value) or not 0.0 < value <= 1.0:
        raise DomainError(f"{name} must lie in (0, 1], got {value!r}")
    return value


def require_nonempty(name: str, values: Sized) -> None:
    if len(values) == 0:
        raise DomainError(f"{name} must be nonempty")


def require_index(name: str, index: int, size: int) -> int:
    """Require 0 <= index < size."""
    if not 0 <= index < size:
        raise DomainError(f"{name}={index} is not a valid point index (space has {size} points)")
    return index
