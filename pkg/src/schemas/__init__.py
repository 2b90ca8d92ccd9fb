"""Structured result and event schemas.

File-format models live in `schemas.files` and are imported from there
directly, since they depend on the triangle-function tags.
"""
from .report import Boundedness, BoundednessKind, CheckReport, Diagnostic, Witness

__all__ = ["Boundedness", "BoundednessKind", "CheckReport", "Diagnostic", "Witness"]
