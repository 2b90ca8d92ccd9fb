"""Tests for strong neighbourhoods, open, dense and closed sets."""
import sys
from pathlib import Path

# Add parent directory to path so src module can be imported
sys.path.insert(0, str(Path(__file__).parent.parent))

from dotenv import load_dotenv

load_dotenv()

from itertools import combinations

import numpy as np
import pytest
from loguru import logger

from src.ddf import H0, TNormKind, TriangleFn, cap, dirac
from src.space import (
    PMSpace,
    candidate_radii,
    closure,
    eps_lambda_neighborhood,
    from_metric,
    is_closed,
    is_dense,
    is_open,
    neighborhood,
    neighborhood_by_levy,
    random_menger_space,
    random_simple_space,
    separate_points,
)
from src.utils.validation import DomainError

TAU_M = TriangleFn.tau_t(TNormKind.T_M)


def pair_space(F) -> PMSpace:
    return PMSpace(("p", "q"), ((H0, F), (F, H0)), TAU_M)


def unit_triangle() -> PMSpace:
    return from_metric(["p", "q", "r"], [[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def test_neighborhood_examples():
    logger.info("Test: strong neighbourhood membership")
    space = pair_space(dirac(0.3))
    assert neighborhood(space, 0, 0.5) == {0, 1}
    assert neighborhood(space, 0, 0.2) == {0}
    for t in (1e-9, 0.1, 2.0):
        assert 0 in neighborhood(space, 0, t)
    with pytest.raises(DomainError):
        neighborhood(space, 0, 0.0)
    with pytest.raises(DomainError):
        neighborhood(space, 5, 0.5)


def test_eps_lambda_neighborhood():
    space = pair_space(cap(0.2, 0.6))
    assert eps_lambda_neighborhood(space, 0, 0.3, 0.5) == {0, 1}
    assert eps_lambda_neighborhood(space, 0, 0.3, 0.3) == {0}
    # N_p(t, t) = N_p(t)
    for t in (0.1, 0.3, 0.5, 0.9):
        assert eps_lambda_neighborhood(space, 0, t, t) == neighborhood(space, 0, t)


def test_neighborhood_duality_on_random_spaces():
    logger.info("Test: eval membership equals d_L(F_pq, H_0) < t")
    rng = np.random.default_rng(53)
    grid = [0.05 * k + 0.0123 for k in range(40)]
    for _ in range(30):
        space = random_simple_space(rng, int(rng.integers(2, 6)))
        for p in range(space.size):
            for t in grid:
                assert neighborhood(space, p, t) == neighborhood_by_levy(space, p, t)


def test_candidate_radii_are_positive_and_sorted():
    space = pair_space(cap(0.0, 0.9))
    radii = candidate_radii(space, 0)
    assert radii == sorted(radii)
    assert all(t > 0 for t in radii)
    assert radii[0] == pytest.approx(0.05)
    assert 1.0 in radii
    assert candidate_radii(from_metric(["only"], [[0.0]]), 0) == [1.0]


def test_is_open_examples():
    logger.info("Test: open sets")
    space = unit_triangle()
    assert is_open(space, range(3)).passed
    report = is_open(space, {0})
    assert report.passed
    assert report.witness("radii") == {"p": 0.5}

    report = is_open(pair_space(cap(0.0, 0.9)), {0})
    assert report.passed
    assert report.witness("radii")["p"] == pytest.approx(0.05)


def test_is_open_failure_witness():
    # F_pq = H_0 breaks axiom (b), so q sits in every neighbourhood of p
    report = is_open(pair_space(H0), {0})
    assert not report.passed
    assert report.witness("point") == "p"
    assert report.witness("smallest_neighborhood") == ["p", "q"]
    assert is_open(pair_space(cap(0.5, 0.2)), {0}).passed
    assert is_open(pair_space(cap(0.5, 0.2)), set()).passed


def test_is_dense_examples():
    logger.info("Test: dense sets")
    space = unit_triangle()
    assert is_dense(space, range(3)).passed
    report = is_dense(space, {1, 2})
    assert not report.passed
    assert report.witness("point") == "p"
    assert report.witness("t") == 0.5
    single = from_metric(["only"], [[0.0]])
    assert is_dense(single, {0}).passed


def test_density_lemma_on_random_menger_spaces():
    logger.info("Test: dense iff whole space on validated Dirac spaces")
    rng = np.random.default_rng(59)
    for _ in range(30):
        space = random_menger_space(rng, int(rng.integers(1, 6)))
        everything = frozenset(range(space.size))
        for k in range(1, space.size + 1):
            for A in combinations(range(space.size), k):
                assert is_dense(space, A).passed == (frozenset(A) == everything)
                assert is_open(space, A).passed
                assert closure(space, A) == frozenset(A)


def test_closed_sets_and_closure():
    space = unit_triangle()
    assert is_closed(space, {0}).passed
    assert closure(space, {0, 1}) == {0, 1}
    assert closure(space, []) == frozenset()


def test_separate_points_examples():
    logger.info("Test: Hausdorff separation")
    space = pair_space(dirac(1.0))
    report = separate_points(space, 0, 1)
    assert report.passed
    t = report.witness("t")
    assert not neighborhood(space, 0, t) & neighborhood(space, 1, t)
    assert not neighborhood(space, 0, 0.3) & neighborhood(space, 1, 0.3)
    with pytest.raises(DomainError):
        separate_points(space, 1, 1)


def test_separation_on_random_spaces():
    rng = np.random.default_rng(61)
    for _ in range(20):
        space = random_simple_space(rng, int(rng.integers(2, 5)))
        for p, q in combinations(range(space.size), 2):
            report = separate_points(space, p, q)
            assert report.passed
            t = report.witness("t")
            assert not neighborhood(space, p, t) & neighborhood(space, q, t)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
