"""Convergent and Cauchy sequences over finite prefixes."""
from __future__ import annotations

import math
from typing import Iterable

from ..ddf.levy import dist_to_h0, in_eps_lambda_ball
from ..schemas.report import CheckReport
from ..utils.validation import DomainError, require_index, require_open_unit_interval, require_positive
from .pmspace import PMSpace, PointSeq


def _min_tail(n: int, min_tail: int | None) -> int:
    tail = math.ceil(n / 2) if min_tail is None else min_tail
    if not 1 <= tail <= n:
        raise DomainError(f"min_tail={tail} must lie in [1, {n}]")
    return tail


def converges(
    space: PMSpace,
    seq: PointSeq | Iterable[int],
    p: int,
    eps: float,
    lam: float,
    min_tail: int | None = None,
) -> CheckReport:
    """Does the prefix satisfy F_{p_n,p}(eps) > 1 - lam from some n_0 on?

    The tail from n_0 (reported 1-based) must hold at least ``min_tail``
    elements, half the prefix by default. The d_L(F_{p_n,p}, H_0) trace is
    attached as a diagnostic.
    """
    seq = space.check_sequence(seq)
    require_index("p", p, space.size)
    require_positive("eps", eps)
    require_open_unit_interval("lam", lam)
    n = len(seq)
    tail = _min_tail(n, min_tail)

    failing = [k for k, point in enumerate(seq) if not in_eps_lambda_ball(space.F(point, p), eps, lam)]
    start = failing[-1] + 1 if failing else 0
    diagnostics = {"dist_to_h0": [dist_to_h0(space.F(point, p)) for point in seq]}
    if n - start >= tail:
        return CheckReport.success("converges", [("n0", start + 1), ("limit", space.labels[p])], diagnostics)
    last = failing[-1]
    return CheckReport.failure(
        "converges",
        [("n", last + 1), ("point", space.labels[seq[last]]), ("limit", space.labels[p])],
        diagnostics,
    )


def is_cauchy(
    space: PMSpace,
    seq: PointSeq | Iterable[int],
    eps: float,
    lam: float,
    min_tail: int | None = None,
) -> CheckReport:
    """Does F_{p_n,p_m}(eps) > 1 - lam hold for all n, m >= n_0 on the prefix?

    The tail rule matches :func:`converges`. Diagnostics carry
    d_L(F_{p_n,p_{n+1}}, H_0) over consecutive pairs.
    """
    seq = space.check_sequence(seq)
    require_positive("eps", eps)
    require_open_unit_interval("lam", lam)
    n = len(seq)
    tail = _min_tail(n, min_tail)

    # a failing pair (i, j), i < j, forces n_0 past i
    worst: tuple[int, int] | None = None
    for i in range(n):
        for j in range(i + 1, n):
            if not in_eps_lambda_ball(space.F(seq[i], seq[j]), eps, lam):
                if worst is None or i > worst[0]:
                    worst = (i, j)
    start = worst[0] + 1 if worst else 0
    diagnostics = {"consecutive_dist_to_h0": [dist_to_h0(space.F(a, b)) for a, b in zip(seq, seq.indices[1:])]}
    if n - start >= tail:
        return CheckReport.success("is_cauchy", [("n0", start + 1)], diagnostics)
    i, j = worst
    return CheckReport.failure(
        "is_cauchy",
        [("pair", [space.labels[seq[i]], space.labels[seq[j]]]), ("positions", [i + 1, j + 1])],
        diagnostics,
    )
