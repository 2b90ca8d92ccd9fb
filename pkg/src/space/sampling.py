"""Seeded random finite metrics and PM spaces with exactly representable distances."""
from __future__ import annotations

import numpy as np

from ..ddf.core import DDF, H0
from ..ddf.triangle import TNormKind, TriangleFn
from .pmspace import PMSpace, from_metric


def random_metric(rng: np.random.Generator, n: int, max_weight: int = 5) -> list[list[float]]:
    """Shortest-path metric of a complete graph with integer edge weights in [1, max_weight]."""
    weights = rng.integers(1, max_weight + 1, size=(n, n))
    d = np.minimum(weights, weights.T)
    np.fill_diagonal(d, 0)
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d.astype(float).tolist()


def random_labels(n: int) -> list[str]:
    return [f"p{i}" for i in range(n)]


def random_menger_space(
    rng: np.random.Generator, n: int, T: TNormKind = TNormKind.T_M, max_weight: int = 5
) -> PMSpace:
    """Dirac embedding of a random integer metric."""
    return from_metric(random_labels(n), random_metric(rng, n, max_weight), T)


def random_profile(rng: np.random.Generator, max_jumps: int = 4) -> DDF:
    """Step d.d.f. with jumps on multiples of 1/8 in (0, 2] and values on multiples of 1/16."""
    k = int(rng.integers(1, max_jumps + 1))
    xs = np.sort(rng.choice(np.arange(1, 17), size=k, replace=False)) * 0.125
    vs = np.sort(rng.choice(np.arange(1, 17), size=k, replace=False)) / 16.0
    return DDF(tuple(xs.tolist()), tuple(vs.tolist()))


def random_simple_space(
    rng: np.random.Generator,
    n: int,
    max_weight: int = 4,
    profile: DDF | None = None,
) -> PMSpace:
    """Simple space F_pq(x) = G(x / d(p, q)) over a random integer metric, under tau_{T_M}.

    Jumps d * g stay exact in binary, so the Menger axiom holds bit-for-bit.
    """
    d = random_metric(rng, n, max_weight)
    G = profile if profile is not None else random_profile(rng)
    dist = tuple(
        tuple(H0 if p == q else DDF(tuple(d[p][q] * x for x in G.xs), G.vs) for q in range(n))
        for p in range(n)
    )
    return PMSpace(tuple(random_labels(n)), dist, TriangleFn.tau_t(TNormKind.T_M))
