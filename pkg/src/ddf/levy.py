"""The modified Lévy metric d_L on distance distribution functions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from loguru import logger

from ..config import get_settings
from ..utils.validation import (
    require_half_open_unit_interval,
    require_open_unit_interval,
    require_positive,
)
from .core import DDF, evaluate


@dataclass(frozen=True)
class LevyCondition:
    """The band condition (F, G; h):

        F(x - h) - h <= G(x) <= F(x + h) + h   for all x in (-1/h, 1/h).

    All three sides are step functions of x whose jumps lie in
    {jumps of G} ∪ {b ± h : b jump of F}, so checking the value at each
    candidate and the right limit after it (plus the right limit at -1/h)
    decides the condition exactly.
    """
    F: DDF
    G: DDF
    h: float

    def __post_init__(self) -> None:
        require_half_open_unit_interval("h", self.h)

    def holds(self) -> bool:
        F, G, h = self.F, self.G, self.h
        lower_edge, upper_edge = -1.0 / h, 1.0 / h
        # jumps of x -> F(x - h) and of x -> F(x + h)
        delayed = F.x_array + h
        advanced = F.x_array - h
        candidates = np.unique(np.concatenate((G.x_array, delayed, advanced)))
        candidates = candidates[(candidates > lower_edge) & (candidates < upper_edge)]

        checks = (
            (candidates, "left"),
            (np.concatenate(([lower_edge], candidates)), "right"),
        )
        for points, side in checks:
            below = F.padded_values[np.searchsorted(delayed, points, side=side)] - h
            middle = G.padded_values[np.searchsorted(G.x_array, points, side=side)]
            above = F.padded_values[np.searchsorted(advanced, points, side=side)] + h
            if np.any(below > middle) or np.any(middle > above):
                return False
        return True


def condition_holds(F: DDF, G: DDF, h: float) -> bool:
    """Decide (F, G; h) exactly.

    Raises:
        DomainError: If h lies outside (0, 1]
    """
    return LevyCondition(F, G, h).holds()


def _joint_condition(F: DDF, G: DDF, h: float) -> bool:
    return condition_holds(F, G, h) and condition_holds(G, F, h)


def levy_distance(
    F: DDF,
    G: DDF,
    tol: float | None = None,
    max_iter: int | None = None,
) -> float:
    """d_L(F, G) = inf{h : (F,G;h) and (G,F;h) hold}, by bisection on h.

    The joint condition only weakens as h grows and always holds at h = 1,
    so bisection over (0, 1] is sound. The midpoint of the final bracket is
    returned, accurate to +/- tol/2. Identical canonical inputs return 0
    exactly.
    """
    if F == G:
        return 0.0
    settings = get_settings()
    tol = settings.levy_tol if tol is None else require_positive("tol", tol)
    max_iter = settings.max_bisection_iter if max_iter is None else max_iter

    lo, hi = 0.0, 1.0
    iterations = 0
    while hi - lo > tol and iterations < max_iter:
        mid = (lo + hi) / 2
        if _joint_condition(F, G, mid):
            hi = mid
        else:
            lo = mid
        iterations += 1
    logger.debug(f"levy_distance bracket [{lo:.9g}, {hi:.9g}] after {iterations} iterations")
    return (lo + hi) / 2


def dist_to_h0(F: DDF) -> float:
    """d_L(F, H_0) = inf{h : F(h+) > 1 - h}, in closed form, capped at 1.

    On the piece [x_i, x_{i+1}) the right limit is v_i, so the inequality
    holds for h > 1 - v_i there; before the first jump it needs h > 1.
    """
    # the piece before the first jump only ever contributes the cap
    best = 1.0
    for i, (x, v) in enumerate(F.breakpoints):
        upper = F.xs[i + 1] if i + 1 < len(F.xs) else np.inf
        start = max(x, 1.0 - v)
        if start < upper:
            best = min(best, start)
    return min(best, 1.0)


def in_h0_ball(F: DDF, t: float) -> bool:
    """F(t) > 1 - t, which holds exactly when d_L(F, H_0) < t.

    Raises:
        DomainError: If t <= 0
    """
    require_positive("t", t)
    return evaluate(F, t) > 1.0 - t


def in_eps_lambda_ball(F: DDF, eps: float, lam: float) -> bool:
    """F(eps) > 1 - lam, the (eps, lam)-neighbourhood predicate."""
    require_positive("eps", eps)
    require_open_unit_interval("lam", lam)
    return evaluate(F, eps) > 1.0 - lam
