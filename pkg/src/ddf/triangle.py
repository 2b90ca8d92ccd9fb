"""t-norms, t-conorms and triangle functions on step d.d.f.s."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import groupby
from typing import Callable

import numpy as np
from loguru import logger

from ..schemas.report import CheckReport
from ..utils.validation import UnsupportedCombinationError, require_positive, require_unit_interval
from .core import DDF, H0, max_excess, sup_family, sup_norm
from .sampling import random_ddf


class TNormKind(str, Enum):
    """The four classical t-norms."""
    T_M = "T_M"
    T_P = "T_P"
    T_L = "T_L"
    T_D = "T_D"


def _minimum(x: float, y: float) -> float:
    return min(x, y)


def _product(x: float, y: float) -> float:
    return x * y


def _lukasiewicz(x: float, y: float) -> float:
    # exact then rounded once, so T_L(x, 1) == x and T_L is commutative bit-for-bit
    return float(max(Fraction(x) + Fraction(y) - 1, Fraction(0)))


def _drastic(x: float, y: float) -> float:
    return min(x, y) if max(x, y) == 1.0 else 0.0


_TNORMS: dict[TNormKind, Callable[[float, float], float]] = {
    TNormKind.T_M: _minimum,
    TNormKind.T_P: _product,
    TNormKind.T_L: _lukasiewicz,
    TNormKind.T_D: _drastic,
}

# Sup-T convolution is a triangle function only for left-continuous T.
LEFT_CONTINUOUS = frozenset({TNormKind.T_M, TNormKind.T_P, TNormKind.T_L})


def tnorm_eval(T: TNormKind, x: float, y: float) -> float:
    """Evaluate the t-norm T at (x, y).

    Raises:
        DomainError: If x or y lies outside [0, 1]
    """
    require_unit_interval("x", x)
    require_unit_interval("y", y)
    return _TNORMS[TNormKind(T)](x, y)


def tconorm_eval(T: TNormKind, x: float, y: float) -> float:
    """Dual t-conorm S(x, y) = 1 - T(1 - x, 1 - y)."""
    require_unit_interval("x", x)
    require_unit_interval("y", y)
    return 1.0 - _TNORMS[TNormKind(T)](1.0 - x, 1.0 - y)


class TriangleKind(str, Enum):
    TAU_T = "tau_T"
    CONVOLUTION = "convolution"


@dataclass(frozen=True)
class TriangleFn:
    """A triangle function: sup-T convolution over a left-continuous t-norm, or convolution.

    Raises:
        UnsupportedCombinationError: For tau_T over T_D or a tau_T without t-norm
    """
    kind: TriangleKind
    tnorm: TNormKind | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", TriangleKind(self.kind))
        if self.kind is TriangleKind.CONVOLUTION:
            if self.tnorm is not None:
                raise UnsupportedCombinationError("convolution does not take a t-norm")
            return
        if self.tnorm is None:
            raise UnsupportedCombinationError("tau_T needs a t-norm")
        object.__setattr__(self, "tnorm", TNormKind(self.tnorm))
        if self.tnorm not in LEFT_CONTINUOUS:
            raise UnsupportedCombinationError(
                f"tau_T requires a left-continuous t-norm; {self.tnorm.value} is not"
            )

    @classmethod
    def tau_t(cls, T: TNormKind) -> "TriangleFn":
        return cls(TriangleKind.TAU_T, TNormKind(T))

    @classmethod
    def convolution(cls) -> "TriangleFn":
        return cls(TriangleKind.CONVOLUTION)

    @property
    def name(self) -> str:
        return f"tau_{self.tnorm.value}" if self.tnorm else "convolution"

    @property
    def value_tnorm(self) -> TNormKind:
        """t-norm T with tau(F, G)(u + v) >= T(F(u), G(v)); T_P for convolution."""
        return self.tnorm if self.tnorm is not None else TNormKind.T_P

    def __call__(self, F: DDF, G: DDF) -> DDF:
        return tau_apply(self, F, G)


def _pair_sums(F: DDF, G: DDF) -> list[tuple[float, int, int]]:
    """(a_i + b_j, i, j) for every pair of jumps, sorted by the sum."""
    return sorted((a + b, i, j) for i, a in enumerate(F.xs) for j, b in enumerate(G.xs))


def _sup_t_convolve(T: TNormKind, F: DDF, G: DDF) -> DDF:
    # value on (c, next] is the max of T(f_i, g_j) over a_i + b_j <= c
    tnorm = _TNORMS[T]
    steps = []
    best = 0.0
    for s, i, j in _pair_sums(F, G):
        best = max(best, tnorm(F.vs[i], G.vs[j]))
        steps.append((s, best))
    return DDF.from_steps(steps)


def _convolve(F: DDF, G: DDF) -> DDF:
    """(F*G)(x) = sum over jumps b_j < x of F(x - b_j) * dG_j, with (F*G)(0) = 0.

    Evaluated as sum over pairs with a_i + b_j < x of dF_i * dG_j in exact
    rationals and rounded once, so F*G and G*F agree bit-for-bit.
    """
    f_values = [Fraction(v) for v in F.vs]
    g_jumps = [Fraction(v) - Fraction(prev) for prev, v in zip((0.0,) + G.vs, G.vs)]
    reached: list[int | None] = [None] * len(G.xs)
    total = Fraction(0)
    steps = []
    for s, group in groupby(_pair_sums(F, G), key=lambda item: item[0]):
        for _, i, j in group:
            previous = f_values[reached[j]] if reached[j] is not None else Fraction(0)
            total += g_jumps[j] * (f_values[i] - previous)
            reached[j] = i
        steps.append((s, float(total)))
    return DDF.from_steps(steps)


def tau_apply(tau: TriangleFn, F: DDF, G: DDF) -> DDF:
    """Apply the triangle function to two d.d.f.s.

    Raises:
        UnsupportedCombinationError: For tau_T over a t-norm that is not left-continuous
    """
    if tau.kind is TriangleKind.CONVOLUTION:
        return _convolve(F, G)
    if tau.tnorm not in LEFT_CONTINUOUS:
        raise UnsupportedCombinationError(f"tau_T over {tau.tnorm} is not a triangle function")
    return _sup_t_convolve(tau.tnorm, F, G)


def _unit_samples(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform samples in [0, 1] with roughly 10% pinned to the endpoints."""
    samples = rng.uniform(0.0, 1.0, size=n)
    pinned = rng.random(n) < 0.1
    samples[pinned] = rng.integers(0, 2, size=int(pinned.sum())).astype(float)
    return samples


def check_tnorm_axioms(
    T: TNormKind,
    n_samples: int = 1000,
    tol: float = 1e-12,
    seed: int | None = None,
) -> CheckReport:
    """Sample commutativity, associativity, monotonicity and the unit law of T."""
    require_positive("n_samples", n_samples)
    require_positive("tol", tol)
    T = TNormKind(T)
    rng = np.random.default_rng(seed)
    xs, ys, zs, us = (_unit_samples(rng, n_samples).tolist() for _ in range(4))
    worst = {"commutativity": 0.0, "associativity": 0.0, "monotonicity": 0.0, "unit": 0.0}
    where: dict[str, list[float]] = {}

    def record(axiom: str, violation: float, sample: list[float]) -> None:
        if violation > worst[axiom]:
            worst[axiom] = violation
            where[axiom] = sample

    for x, y, z, u in zip(xs, ys, zs, us):
        t = lambda a, b: tnorm_eval(T, a, b)  # noqa: E731
        record("commutativity", abs(t(x, y) - t(y, x)), [x, y])
        record("associativity", abs(t(t(x, y), z) - t(x, t(y, z))), [x, y, z])
        larger = max(x, u)
        record("monotonicity", max(0.0, t(x, y) - t(larger, y)), [x, larger, y])
        record("unit", abs(t(x, 1.0) - x), [x])

    diagnostics = {axiom: [value] for axiom, value in worst.items()}
    failing = [axiom for axiom, value in worst.items() if value > tol]
    name = f"tnorm_axioms[{T.value}]"
    logger.debug(f"{name}: worst violations {worst}")
    if failing:
        axiom = failing[0]
        return CheckReport.failure(
            name, [("axiom", axiom), ("sample", where[axiom]), ("violation", worst[axiom])], diagnostics
        )
    return CheckReport.success(name, [("samples", n_samples)], diagnostics)


def tnorm_ordering_report(n_samples: int = 1000, seed: int | None = None) -> CheckReport:
    """Check T_D <= T_L <= T_P <= T_M pointwise on random samples."""
    rng = np.random.default_rng(seed)
    chain = [TNormKind.T_D, TNormKind.T_L, TNormKind.T_P, TNormKind.T_M]
    for x, y in zip(_unit_samples(rng, n_samples).tolist(), _unit_samples(rng, n_samples).tolist()):
        values = [tnorm_eval(T, x, y) for T in chain]
        for lower, upper, lo_value, hi_value in zip(chain, chain[1:], values, values[1:]):
            if lo_value > hi_value:
                return CheckReport.failure(
                    "tnorm_ordering",
                    [("pair", [lower.value, upper.value]), ("sample", [x, y])],
                )
    return CheckReport.success("tnorm_ordering", [("samples", n_samples)])


def check_triangle_axioms(
    tau: TriangleFn,
    n_samples: int = 200,
    tol: float = 1e-9,
    seed: int | None = None,
    max_breakpoints: int = 6,
) -> CheckReport:
    """Sample the triangle-function axioms on random d.d.f.s.

    Commutativity and the H_0 identity are checked exactly on canonical
    forms; associativity and monotonicity in sup-norm within tol, ignoring
    pieces narrower than tol (re-associated breakpoint sums may differ in
    the last bit).
    """
    require_positive("n_samples", n_samples)
    require_positive("tol", tol)
    rng = np.random.default_rng(seed)
    exact_failures = {"commutativity": 0, "identity": 0}
    worst = {"associativity": 0.0, "monotonicity": 0.0}
    witness: list[tuple[str, object]] = []

    for _ in range(n_samples):
        F, G, K, R = (random_ddf(rng, max_breakpoints=max_breakpoints) for _ in range(4))
        if tau(F, G) != tau(G, F):
            exact_failures["commutativity"] += 1
            witness = witness or [("axiom", "commutativity"), ("F", F.breakpoints), ("G", G.breakpoints)]
        if tau(F, H0) != F or tau(H0, F) != F:
            exact_failures["identity"] += 1
            witness = witness or [("axiom", "identity"), ("F", F.breakpoints)]
        gap = sup_norm(tau(tau(F, G), K), tau(F, tau(G, K)), sliver=tol)
        if gap > worst["associativity"]:
            worst["associativity"] = gap
            if gap > tol:
                witness = witness or [("axiom", "associativity"), ("F", F.breakpoints), ("G", G.breakpoints), ("H", K.breakpoints)]
        larger = sup_family([F, R])
        excess = max_excess(tau(F, G), tau(larger, G), sliver=tol)
        if excess > worst["monotonicity"]:
            worst["monotonicity"] = excess
            if excess > tol:
                witness = witness or [("axiom", "monotonicity"), ("F", F.breakpoints), ("F_larger", larger.breakpoints), ("G", G.breakpoints)]

    diagnostics = {
        "commutativity_failures": [float(exact_failures["commutativity"])],
        "identity_failures": [float(exact_failures["identity"])],
        "associativity_max_gap": [worst["associativity"]],
        "monotonicity_max_excess": [worst["monotonicity"]],
    }
    name = f"triangle_axioms[{tau.name}]"
    if witness:
        return CheckReport.failure(name, witness, diagnostics)
    return CheckReport.success(name, [("samples", n_samples)], diagnostics)
