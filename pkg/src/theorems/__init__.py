"""Executable theorem checks over finite PM spaces."""
from .checks import (
    DEFAULT_EPS_GRID,
    baire_check,
    cantor_check,
    completeness_report,
    diameter_report,
    heine_borel_report,
    neighborhood_system_report,
    subsequence_check,
    tb_bounded_report,
    two_eps_report,
)
from .runner import CheckRegistry, CheckResult, CheckRunner

__all__ = [
    "DEFAULT_EPS_GRID",
    "CheckRegistry",
    "CheckResult",
    "CheckRunner",
    "baire_check",
    "cantor_check",
    "completeness_report",
    "diameter_report",
    "heine_borel_report",
    "neighborhood_system_report",
    "subsequence_check",
    "tb_bounded_report",
    "two_eps_report",
]
