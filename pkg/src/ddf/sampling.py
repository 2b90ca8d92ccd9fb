"""Seeded random d.d.f. generation for randomized checks."""
from __future__ import annotations

import numpy as np

from .core import DDF


def random_ddf(
    rng: np.random.Generator,
    max_breakpoints: int = 20,
    x_max: float = 3.0,
    grid: float | None = None,
    proper: bool | None = None,
    min_breakpoints: int = 0,
) -> DDF:
    """Draw a canonical step d.d.f.

    Args:
        rng: numpy random generator
        max_breakpoints: upper bound on the number of jumps
        x_max: jumps are drawn in [0, x_max]
        grid: when given, jump abscissae are rounded to multiples of grid
        proper: force (True) or forbid (False) reaching 1 at a finite point;
            None decides at random
        min_breakpoints: lower bound on the number of jumps drawn
    """
    k = int(rng.integers(min_breakpoints, max_breakpoints + 1))
    xs = rng.uniform(0.0, x_max, size=k)
    if grid:
        xs = np.round(xs / grid) * grid
    xs = np.unique(xs)
    vs = np.sort(rng.uniform(0.0, 1.0, size=len(xs)))
    if proper is None:
        proper = bool(rng.random() < 0.5)
    if len(vs) and proper:
        vs[-1] = 1.0
    elif len(vs) and vs[-1] == 1.0:
        vs[-1] = 0.999
    return DDF.from_steps(zip(xs.tolist(), vs.tolist()))
