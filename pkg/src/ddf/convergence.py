"""Weak convergence of d.d.f. sequences, diagnosed two ways."""
from __future__ import annotations

from typing import Sequence

from loguru import logger

from ..schemas.report import CheckReport
from ..utils.validation import require_nonempty, require_positive
from .core import DDF, continuity_points, evaluate
from .levy import levy_distance


def weak_convergence_report(seq: Sequence[DDF], F: DDF, tol: float) -> CheckReport:
    """Compare pointwise convergence at continuity points of F with d_L convergence.

    Diagnostics hold, per element, the largest |F_k(x) - F(x)| over the
    sampled continuity points and d_L(F_k, F). The sample covers every piece
    of the partition cut by the jumps of F and of the whole sequence, minus
    the points within tol of a jump of F: there d_L(F_k, F) < tol still lets
    F_k miss a whole jump. The verdicts are read off the final element; the
    report passes when both verdicts agree.
    """
    require_positive("tol", tol)
    require_nonempty("seq", seq)
    points = continuity_points(F, seq, margin=tol)
    target = [evaluate(F, x) for x in points]

    pointwise = [max(abs(evaluate(Fk, x) - fx) for x, fx in zip(points, target)) for Fk in seq]
    levy = [levy_distance(Fk, F) for Fk in seq]
    converged_pointwise = pointwise[-1] < tol
    converged_levy = levy[-1] < tol
    consistent = converged_pointwise == converged_levy
    logger.debug(
        f"weak convergence over {len(seq)} elements: pointwise={pointwise[-1]:.3g} levy={levy[-1]:.3g}"
    )

    witnesses = [
        ("converged_pointwise", converged_pointwise),
        ("converged_levy", converged_levy),
        ("consistent", consistent),
        ("final_levy_distance", levy[-1]),
    ]
    diagnostics = {"pointwise_max_diff": pointwise, "levy_distance": levy}
    if consistent:
        return CheckReport.success("weak_convergence", witnesses, diagnostics)
    return CheckReport.failure("weak_convergence", witnesses, diagnostics)
