"""Probabilistic diameter, boundedness classes and total boundedness."""
from __future__ import annotations

from enum import Enum
from typing import Iterable

from ..ddf.core import DDF, evaluate, pointwise_inf
from ..schemas.report import Boundedness, BoundednessKind, CheckReport
from ..utils.validation import require_positive
from .pmspace import PMSpace, SubsetRef
from .topology import neighborhood


class TotalBoundednessMode(str, Enum):
    COVER = "cover"
    STRONG = "strong"


def prob_diameter(space: PMSpace, A: SubsetRef | Iterable[int]) -> DDF:
    """D_A, the pointwise infimum of F_pq over all ordered pairs of A.

    The infimum of step d.d.f.s is already left-continuous, so the
    regularization sup_{t<x} leaves it unchanged.
    """
    A = space.check_subset(A)
    return pointwise_inf([space.F(p, q) for p in A for q in A])


def classify_boundedness(space: PMSpace, A: SubsetRef | Iterable[int]) -> Boundedness:
    """Bounded when D_A reaches 1 at a finite argument, unbounded when it stays 0."""
    s = prob_diameter(space, A).final_value
    if s == 1.0:
        kind = BoundednessKind.BOUNDED
    elif s == 0.0:
        kind = BoundednessKind.UNBOUNDED
    else:
        kind = BoundednessKind.SEMI_BOUNDED
    return Boundedness(kind=kind, sup_value=s)


def totally_bounded(
    space: PMSpace,
    A: SubsetRef | Iterable[int],
    eps: float,
    mode: TotalBoundednessMode | str = TotalBoundednessMode.COVER,
) -> CheckReport:
    """Total boundedness of A at radius eps.

    ``cover`` greedily covers A with neighbourhoods N_p(eps), p in A, which
    always succeeds on a finite set. ``strong`` asks for F_pq(eps) = 1 for
    every pair of A.

    Raises:
        DomainError: If eps <= 0
    """
    A = space.check_subset(A)
    require_positive("eps", eps)
    mode = TotalBoundednessMode(mode)
    name = f"totally_bounded[{mode.value}]"

    if mode is TotalBoundednessMode.STRONG:
        for p in A:
            for q in A:
                value = evaluate(space.F(p, q), eps)
                if value != 1.0:
                    return CheckReport.failure(
                        name, [("pair", [space.labels[p], space.labels[q]]), ("value", value), ("eps", eps)]
                    )
        return CheckReport.success(name, [("centers", [space.labels[min(A.indices)]]), ("eps", eps)])

    uncovered = set(A.indices)
    centers: list[int] = []
    while uncovered:
        best = max(sorted(A.indices), key=lambda p: len(neighborhood(space, p, eps) & uncovered))
        centers.append(best)
        uncovered -= neighborhood(space, best, eps)
    return CheckReport.success(name, [("cover", [space.labels[p] for p in centers]), ("eps", eps)])
