"""The strong topology of a finite PM space.

N_p(t) = {q : F_pq(t) > 1 - t} grows with t and q enters it exactly when t
passes dist_to_h0(F_pq), so every question about open sets reduces to a
finite set of candidate radii per point.
"""
from __future__ import annotations

from typing import Iterable

from loguru import logger

from ..config import get_settings
from ..ddf.levy import dist_to_h0, in_eps_lambda_ball, in_h0_ball
from ..schemas.report import CheckReport
from ..utils.validation import DomainError, require_index, require_positive
from .pmspace import PMSpace, SubsetRef


def neighborhood(space: PMSpace, p: int, t: float) -> frozenset[int]:
    """N_p(t).

    Raises:
        DomainError: If t <= 0 or p is not a point index
    """
    require_index("p", p, space.size)
    require_positive("t", t)
    return frozenset(q for q in range(space.size) if in_h0_ball(space.F(p, q), t))


def eps_lambda_neighborhood(space: PMSpace, p: int, eps: float, lam: float) -> frozenset[int]:
    """N_p(eps, lam) = {q : F_pq(eps) > 1 - lam}."""
    require_index("p", p, space.size)
    return frozenset(q for q in range(space.size) if in_eps_lambda_ball(space.F(p, q), eps, lam))


def candidate_radii(space: PMSpace, p: int, boundary_eps: float | None = None) -> list[float]:
    """Ascending radii at which N_p(t) is sampled.

    Positive breakpoints of the row of p shifted by +/- boundary_eps, each
    membership threshold shifted the same way together with its half, and 1.
    """
    require_index("p", p, space.size)
    delta = get_settings().boundary_eps if boundary_eps is None else boundary_eps
    radii = {1.0}
    for q in range(space.size):
        if q == p:
            continue
        F = space.F(p, q)
        threshold = dist_to_h0(F)
        radii.update(x + s for x in F.xs if x > 0 for s in (-delta, delta))
        radii.update((threshold - delta, threshold + delta, threshold / 2))
    return sorted(t for t in radii if t > 0)


def _indices(space: PMSpace, A: SubsetRef | Iterable[int]) -> frozenset[int]:
    indices = A.indices if isinstance(A, SubsetRef) else frozenset(A)
    for i in indices:
        require_index("point", i, space.size)
    return indices


def open_radius(space: PMSpace, p: int, A: SubsetRef | Iterable[int]) -> float | None:
    """Smallest candidate t with N_p(t) inside A, or None."""
    indices = _indices(space, A)
    return next((t for t in candidate_radii(space, p) if neighborhood(space, p, t) <= indices), None)


def is_open(space: PMSpace, A: SubsetRef | Iterable[int]) -> CheckReport:
    """Every point of A has a strong neighbourhood inside A."""
    indices = _indices(space, A)
    radii = {}
    for p in sorted(indices):
        t = open_radius(space, p, indices)
        if t is None:
            smallest = neighborhood(space, p, candidate_radii(space, p)[0])
            return CheckReport.failure(
                "is_open",
                [("point", space.labels[p]), ("smallest_neighborhood", space.names(smallest))],
            )
        radii[space.labels[p]] = t
    return CheckReport.success("is_open", [("radii", radii)])


def is_dense(space: PMSpace, A: SubsetRef | Iterable[int]) -> CheckReport:
    """Every strong neighbourhood of every point meets A."""
    indices = _indices(space, A)
    for p in range(space.size):
        for t in candidate_radii(space, p):
            if not neighborhood(space, p, t) & indices:
                return CheckReport.failure("is_dense", [("point", space.labels[p]), ("t", t)])
    return CheckReport.success("is_dense", [("subset", space.names(indices))])


def closure(space: PMSpace, A: SubsetRef | Iterable[int]) -> frozenset[int]:
    """A together with every point whose neighbourhoods all meet A."""
    indices = _indices(space, A)
    adherent = {
        p
        for p in range(space.size)
        if all(neighborhood(space, p, t) & indices for t in candidate_radii(space, p))
    }
    return indices | adherent


def is_closed(space: PMSpace, A: SubsetRef | Iterable[int]) -> CheckReport:
    """A is closed when its complement is open."""
    indices = _indices(space, A)
    complement = frozenset(range(space.size)) - indices
    report = is_open(space, complement)
    if report.passed:
        return CheckReport.success("is_closed", [("subset", space.names(indices))])
    return CheckReport.failure("is_closed", [(w.label, w.value) for w in report.witnesses])


def separate_points(space: PMSpace, p: int, q: int) -> CheckReport:
    """Find t with N_p(t) and N_q(t) disjoint, largest candidate first.

    Raises:
        DomainError: If p == q
    """
    require_index("p", p, space.size)
    require_index("q", q, space.size)
    if p == q:
        raise DomainError("separate_points needs two distinct points")
    radii = set(candidate_radii(space, p)) | set(candidate_radii(space, q))
    radii |= {t / 2 for t in radii}
    overlap: frozenset[int] = frozenset()
    for t in sorted(radii, reverse=True):
        overlap = neighborhood(space, p, t) & neighborhood(space, q, t)
        if not overlap:
            logger.debug(f"separated {space.labels[p]} and {space.labels[q]} at t={t}")
            return CheckReport.success("separate_points", [("t", t)])
    return CheckReport.failure(
        "separate_points",
        [("points", [space.labels[p], space.labels[q]]), ("overlap", space.names(overlap))],
    )


def neighborhood_by_levy(space: PMSpace, p: int, t: float) -> frozenset[int]:
    """N_p(t) computed as {q : d_L(F_pq, H_0) < t}."""
    require_positive("t", t)
    return frozenset(q for q in range(space.size) if dist_to_h0(space.F(p, q)) < t)
