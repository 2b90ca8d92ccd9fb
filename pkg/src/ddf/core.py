"""Distance distribution functions as canonical left-continuous step functions.

A DDF stores its jumps as two parallel tuples: ``xs`` (strictly increasing,
nonnegative, finite) and ``vs`` (strictly increasing, in (0, 1]). It denotes

    F(x) = 0      for x <= xs[0]
    F(x) = vs[i]  for xs[i] < x <= xs[i+1]
    F(x) = vs[-1] for x > xs[-1]
    F(+inf) = 1

so any mass 1 - vs[-1] sits at +infinity.
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ..utils.validation import DomainError, require_nonempty

INF = math.inf


@dataclass(frozen=True)
class DDF:
    """Immutable canonical step d.d.f.

    Construct directly only from already-canonical data; use
    :meth:`from_steps` to canonicalize arbitrary monotone jump lists.

    Raises:
        DomainError: If the jump lists violate any canonical invariant
    """
    xs: tuple[float, ...] = ()
    vs: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        xs = tuple(float(x) for x in self.xs)
        vs = tuple(float(v) for v in self.vs)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "vs", vs)
        if len(xs) != len(vs):
            raise DomainError(f"xs and vs differ in length ({len(xs)} != {len(vs)})")
        for i, (x, v) in enumerate(zip(xs, vs)):
            if not math.isfinite(x) or x < 0:
                raise DomainError(f"breakpoint x[{i}]={x!r} must be finite and >= 0")
            if math.isnan(v) or not 0.0 < v <= 1.0:
                raise DomainError(f"value v[{i}]={v!r} must lie in (0, 1]")
            if i > 0 and x <= xs[i - 1]:
                raise DomainError(f"x not strictly increasing at index {i}")
            if i > 0 and v <= vs[i - 1]:
                raise DomainError(f"v not strictly increasing at index {i}")

    @classmethod
    def from_steps(cls, pairs: Iterable[tuple[float, float]]) -> "DDF":
        """Canonicalize (x, value-after-x) pairs of a non-decreasing step function.

        Duplicate abscissae keep the larger value; jumps that do not raise
        the value (including jumps to 0) are dropped.
        """
        merged: dict[float, float] = {}
        for x, v in pairs:
            x, v = float(x), float(v)
            merged[x] = max(v, merged.get(x, v))
        xs: list[float] = []
        vs: list[float] = []
        for x in sorted(merged):
            v = merged[x]
            if v > (vs[-1] if vs else 0.0):
                xs.append(x)
                vs.append(v)
        return cls(tuple(xs), tuple(vs))

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    def __len__(self) -> int:
        return len(self.xs)

    @property
    def breakpoints(self) -> list[tuple[float, float]]:
        return list(zip(self.xs, self.vs))

    @property
    def final_value(self) -> float:
        """sup of F over finite arguments."""
        return self.vs[-1] if self.vs else 0.0

    @property
    def mass_at_infinity(self) -> float:
        return 1.0 - self.final_value

    @cached_property
    def x_array(self) -> np.ndarray:
        return np.asarray(self.xs, dtype=float)

    @cached_property
    def padded_values(self) -> np.ndarray:
        """Values indexed by the number of breakpoints passed (0 prepended)."""
        return np.concatenate(([0.0], np.asarray(self.vs, dtype=float)))

    def evaluate_many(self, points: np.ndarray, right: bool = False) -> np.ndarray:
        """Vectorised evaluation at finite points; ``right`` selects right limits."""
        side = "right" if right else "left"
        return self.padded_values[np.searchsorted(self.x_array, points, side=side)]

    def __repr__(self) -> str:
        if not self.xs:
            return "DDF(H_inf)"
        return "DDF(" + ", ".join(f"({x:g}, {v:g})" for x, v in self.breakpoints) + ")"


def dirac(a: float) -> DDF:
    """The Dirac d.d.f. H_a: 0 on [-inf, a], 1 on (a, +inf].

    Raises:
        DomainError: If a is negative or NaN
    """
    if math.isnan(a) or a < 0:
        raise DomainError(f"Dirac parameter must be >= 0 or +inf, got {a!r}")
    if a == INF:
        return DDF()
    return DDF((a,), (1.0,))


def cap(x: float, v: float) -> DDF:
    """Single jump to v at x; the remaining mass 1 - v sits at +inf."""
    return DDF((x,), (v,))


H0 = dirac(0.0)
H_INF = dirac(INF)


def evaluate(F: DDF, x: float) -> float:
    """F(x) under the left-continuous step semantics; F(-inf)=0, F(+inf)=1."""
    if x == INF:
        return 1.0
    if x == -INF:
        return 0.0
    k = bisect_left(F.xs, x)
    return F.vs[k - 1] if k else 0.0


def right_limit(F: DDF, x: float) -> float:
    """lim F(y) as y decreases to x, for finite x."""
    k = bisect_right(F.xs, x)
    return F.vs[k - 1] if k else 0.0


def is_dirac(F: DDF) -> bool:
    return not F.xs or (len(F.xs) == 1 and F.vs[0] == 1.0)


def dirac_parameter(F: DDF) -> float:
    """Recover a from H_a (+inf for H_inf).

    Raises:
        DomainError: If F is not a Dirac d.d.f.
    """
    if not is_dirac(F):
        raise DomainError(f"{F!r} is not a Dirac distribution function")
    return F.xs[0] if F.xs else INF


def merged_breakpoints(Fs: Sequence[DDF]) -> list[float]:
    return sorted({x for F in Fs for x in F.xs})


def leq(F: DDF, G: DDF) -> bool:
    """F <= G pointwise, decided on the merged breakpoints' right limits."""
    return all(right_limit(F, b) <= right_limit(G, b) for b in merged_breakpoints([F, G]))


def _pieces(F: DDF, G: DDF, sliver: float) -> Iterable[tuple[float, float, float]]:
    """(left end, F value, G value) on every open piece wider than ``sliver``."""
    cuts = merged_breakpoints([F, G])
    for k, b in enumerate(cuts):
        width = cuts[k + 1] - b if k + 1 < len(cuts) else INF
        if width > sliver:
            yield b, right_limit(F, b), right_limit(G, b)


def max_excess(F: DDF, G: DDF, sliver: float = 0.0) -> float:
    """sup (F - G)^+ over pieces wider than ``sliver``."""
    if F == G:
        return 0.0
    return max(0.0, max((f - g for _, f, g in _pieces(F, G, sliver)), default=0.0))


def sup_norm(F: DDF, G: DDF, sliver: float = 0.0) -> float:
    """sup |F - G| over pieces wider than ``sliver``."""
    if F == G:
        return 0.0
    return max((abs(f - g) for _, f, g in _pieces(F, G, sliver)), default=0.0)


def first_violation(F: DDF, G: DDF) -> float | None:
    """A finite x with F(x) > G(x), or None when leq(F, G)."""
    cuts = merged_breakpoints([F, G])
    for k, b in enumerate(cuts):
        if right_limit(F, b) > right_limit(G, b):
            return (b + cuts[k + 1]) / 2 if k + 1 < len(cuts) else b + 1.0
    return None


def sup_family(Fs: Sequence[DDF]) -> DDF:
    """Pointwise supremum of a nonempty family.

    Raises:
        DomainError: If the family is empty
    """
    require_nonempty("family", Fs)
    cuts = merged_breakpoints(Fs)
    return DDF.from_steps((b, max(right_limit(F, b) for F in Fs)) for b in cuts)


def pointwise_inf(Fs: Sequence[DDF]) -> DDF:
    """Pointwise infimum of a nonempty family; the value at +inf stays 1.

    Raises:
        DomainError: If the family is empty
    """
    require_nonempty("family", Fs)
    cuts = merged_breakpoints(Fs)
    return DDF.from_steps((b, min(right_limit(F, b) for F in Fs)) for b in cuts)


def continuity_points(F: DDF, others: Sequence[DDF] = (), margin: float = 0.0) -> list[float]:
    """Sample continuity points of F.

    One point inside every piece of the partition cut by the jumps of F and
    of ``others``, plus two points past the last cut. Points closer than
    ``margin`` to a jump of F are dropped; the cuts include each jump of F
    shifted by +-margin so no piece straddles that boundary.
    """
    cuts = set(merged_breakpoints([F, *others]))
    if margin > 0:
        cuts.update(b + margin for b in F.xs)
        cuts.update(b - margin for b in F.xs if b > margin)
    cuts = sorted(cuts)
    if not cuts:
        return [0.5, 1.0, 2.0]
    points = [cuts[0] / 2] if cuts[0] > 0 else []
    points.extend((a + b) / 2 for a, b in zip(cuts, cuts[1:]))
    points.extend([cuts[-1] + 0.5, cuts[-1] + 1.0])
    jumps = set(F.xs)
    return [x for x in points if x not in jumps and all(abs(x - b) >= margin for b in F.xs)]
