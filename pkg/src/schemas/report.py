"""Structured results returned by every validator and theorem check."""
from __future__ import annotations

from enum import Enum
from typing import Any, Iterable

from pydantic import BaseModel, Field, computed_field, model_validator


class Witness(BaseModel):
    label: str = Field(description="What the value identifies (axiom, pair, point, x, t, ...)")
    value: Any = Field(description="JSON-compatible witness value")


class Diagnostic(BaseModel):
    name: str = Field(description="Name of the numeric trace")
    values: list[float] = Field(default_factory=list, description="Trace values in evaluation order")


class CheckReport(BaseModel):
    """Pass/fail result with witnesses.

    A failed report always names a witness; a report whose hypothesis is
    unmet is a vacuous pass and names the unmet hypothesis.
    """
    name: str = Field(description="Check name")
    passed: bool = Field(description="Whether the checked statement holds on this instance")
    hypothesis_met: bool = Field(default=True, description="False when an implication holds vacuously")
    unmet_hypothesis: str | None = Field(default=None, description="Which hypothesis failed")
    witnesses: list[Witness] = Field(default_factory=list)
    diagnostics: list[Diagnostic] = Field(default_factory=list)
    sub_reports: list["CheckReport"] = Field(default_factory=list)

    @computed_field
    @property
    def vacuous(self) -> bool:
        return not self.hypothesis_met

    @model_validator(mode="after")
    def _structural_invariants(self) -> "CheckReport":
        if not self.passed and not self.witnesses:
            raise ValueError(f"failed report {self.name!r} must carry a witness")
        if not self.hypothesis_met and (not self.passed or not self.unmet_hypothesis):
            raise ValueError(f"report {self.name!r} with unmet hypothesis must be a named vacuous pass")
        return self

    @classmethod
    def success(
        cls,
        name: str,
        witnesses: Iterable[tuple[str, Any]] = (),
        diagnostics: dict[str, list[float]] | None = None,
        sub_reports: list["CheckReport"] | None = None,
    ) -> "CheckReport":
        return cls(
            name=name,
            passed=True,
            witnesses=[Witness(label=label, value=value) for label, value in witnesses],
            diagnostics=_diagnostics(diagnostics),
            sub_reports=sub_reports or [],
        )

    @classmethod
    def failure(
        cls,
        name: str,
        witnesses: Iterable[tuple[str, Any]],
        diagnostics: dict[str, list[float]] | None = None,
        sub_reports: list["CheckReport"] | None = None,
    ) -> "CheckReport":
        return cls(
            name=name,
            passed=False,
            witnesses=[Witness(label=label, value=value) for label, value in witnesses],
            diagnostics=_diagnostics(diagnostics),
            sub_reports=sub_reports or [],
        )

    @classmethod
    def vacuous_pass(
        cls,
        name: str,
        unmet_hypothesis: str,
        witnesses: Iterable[tuple[str, Any]] = (),
        diagnostics: dict[str, list[float]] | None = None,
        sub_reports: list["CheckReport"] | None = None,
    ) -> "CheckReport":
        return cls(
            name=name,
            passed=True,
            hypothesis_met=False,
            unmet_hypothesis=unmet_hypothesis,
            witnesses=[Witness(label=label, value=value) for label, value in witnesses],
            diagnostics=_diagnostics(diagnostics),
            sub_reports=sub_reports or [],
        )

    def witness(self, label: str, default: Any = None) -> Any:
        """Return the first witness value with this label."""
        return next((w.value for w in self.witnesses if w.label == label), default)

    def diagnostic(self, name: str) -> list[float]:
        return next((d.values for d in self.diagnostics if d.name == name), [])

    def sub_report(self, name: str) -> "CheckReport | None":
        return next((r for r in self.sub_reports if r.name == name), None)


def _diagnostics(traces: dict[str, list[float]] | None) -> list[Diagnostic]:
    return [Diagnostic(name=name, values=list(values)) for name, values in (traces or {}).items()]


class BoundednessKind(str, Enum):
    BOUNDED = "bounded"
    SEMI_BOUNDED = "semi-bounded"
    UNBOUNDED = "unbounded"


class Boundedness(BaseModel):
    kind: BoundednessKind = Field(description="Probabilistic boundedness class of the subset")
    sup_value: float = Field(description="sup of D_A over finite x > 0")
