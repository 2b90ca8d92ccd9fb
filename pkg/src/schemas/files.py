"""Pydantic models for the JSON documents read and written by the CLI."""
from __future__ import annotations

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..ddf.triangle import TNormKind


class BreakpointModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    x: float = Field(ge=0, description="Jump abscissa; the new value holds just to the right of x")
    v: float = Field(gt=0, le=1, description="Value after the jump")

    @field_validator("x")
    @classmethod
    def _finite_x(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("x must be finite")
        return value


class DdfFile(BaseModel):
    """A distance distribution function as a list of jumps."""
    model_config = ConfigDict(extra="forbid")

    breakpoints: list[BreakpointModel] = Field(
        default_factory=list, description="Jumps, strictly increasing in both x and v"
    )

    @model_validator(mode="after")
    def _strictly_increasing(self) -> "DdfFile":
        for i in range(1, len(self.breakpoints)):
            if self.breakpoints[i].x <= self.breakpoints[i - 1].x:
                raise ValueError(f"x not strictly increasing at index {i}")
            if self.breakpoints[i].v <= self.breakpoints[i - 1].v:
                raise ValueError(f"v not strictly increasing at index {i}")
        return self


class TauSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["tau_T", "convolution"] = Field(description="Triangle function family")
    tnorm: TNormKind | None = Field(default=None, description="t-norm for tau_T (T_M, T_P or T_L)")

    @model_validator(mode="after")
    def _tnorm_matches_kind(self) -> "TauSpec":
        if self.kind == "tau_T" and self.tnorm is None:
            raise ValueError("tau_T requires a tnorm")
        if self.kind == "convolution" and self.tnorm is not None:
            raise ValueError("convolution takes no tnorm")
        return self


class SpaceFile(BaseModel):
    """A finite PM space: labels, triangle function and the upper triangle of distances."""
    model_config = ConfigDict(extra="forbid")

    points: list[str] = Field(min_length=1, description="Point labels, unique")
    tau: TauSpec
    dist: dict[str, DdfFile] = Field(
        default_factory=dict, description='Map "p,q" -> d.d.f. for each unordered pair p != q'
    )

    @model_validator(mode="after")
    def _pairs_complete(self) -> "SpaceFile":
        seen: set[str] = set()
        for label in self.points:
            if label in seen:
                raise ValueError(f"duplicate label {label}")
            if "," in label:
                raise ValueError(f"label {label!r} must not contain ','")
            seen.add(label)
        position = {label: i for i, label in enumerate(self.points)}
        covered: set[tuple[int, int]] = set()
        for key in self.dist:
            parts = key.split(",")
            if len(parts) != 2 or parts[0] not in position or parts[1] not in position:
                raise ValueError(f"bad pair key {key!r}")
            i, j = position[parts[0]], position[parts[1]]
            if i == j:
                raise ValueError(f"diagonal entry {key!r} is implied (H_0) and must be omitted")
            pair = (min(i, j), max(i, j))
            if pair in covered:
                raise ValueError(f"pair {key!r} given twice")
            covered.add(pair)
        for i in range(len(self.points)):
            for j in range(i + 1, len(self.points)):
                if (i, j) not in covered:
                    raise ValueError(f"missing pair {self.points[i]},{self.points[j]}")
        return self

    def pair_entry(self, i: int, j: int) -> DdfFile:
        """Entry for the unordered pair of positions i != j."""
        p, q = self.points[i], self.points[j]
        return self.dist[f"{p},{q}"] if f"{p},{q}" in self.dist else self.dist[f"{q},{p}"]


class MetricFile(BaseModel):
    """Input of `from-metric`: a classical finite metric to embed."""
    model_config = ConfigDict(extra="forbid")

    labels: list[str] = Field(min_length=1)
    d: list[list[float]] = Field(description="Symmetric distance matrix")
    tnorm: TNormKind = Field(default=TNormKind.T_M)
    convolution: bool = Field(default=False, description="Build a Wald space instead of a Menger space")
