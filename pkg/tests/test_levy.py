"""Tests for the modified Lévy metric."""
import sys
from pathlib import Path

# Add parent directory to path so src module can be imported
sys.path.insert(0, str(Path(__file__).parent.parent))

from dotenv import load_dotenv

load_dotenv()

import math

import numpy as np
import pytest
from loguru import logger

from src.ddf import (
    H0,
    H_INF,
    cap,
    condition_holds,
    dirac,
    dist_to_h0,
    in_eps_lambda_ball,
    in_h0_ball,
    leq,
    levy_distance,
    random_ddf,
    sup_family,
)
from src.utils.validation import DomainError

ORACLE_STEP = 1e-4


def dirac_band_holds(a: float, b: float, h: float) -> bool:
    """(H_a, H_b; h) decided by interval arithmetic on the two jumps."""
    window = 1.0 / h
    # H_a(x - h) - h > H_b(x) somewhere in (a + h, b] inside the window
    if h < 1.0 and a + h < b and a + h < window:
        return False
    # H_b(x) > H_a(x + h) + h somewhere in (b, a - h] inside the window
    if h < 1.0 and b < a - h and b < window:
        return False
    return True


def dirac_oracle(a: float, b: float) -> float:
    """Smallest h on a 1e-4 grid for which both band conditions hold."""
    for k in range(1, int(round(1 / ORACLE_STEP)) + 1):
        h = k * ORACLE_STEP
        if dirac_band_holds(a, b, h) and dirac_band_holds(b, a, h):
            return h
    return 1.0


def test_levy_identical_is_zero():
    logger.info("Test: d_L(F, F) = 0 exactly")
    F = cap(0.2, 0.6)
    assert levy_distance(F, F) == 0.0
    assert levy_distance(H_INF, H_INF) == 0.0


def test_levy_dirac_examples():
    logger.info("Test: Dirac examples")
    assert levy_distance(dirac(0.3), dirac(0.5)) == pytest.approx(0.2, abs=1e-6)
    assert levy_distance(H0, dirac(2.0)) == pytest.approx(1.0, abs=1e-6)
    # H_inf sits at distance 1/b from H_b once 1/b < 1
    assert levy_distance(H_INF, dirac(4.0)) == pytest.approx(0.25, abs=1e-6)


def test_levy_matches_dirac_oracle():
    logger.info("Test: 200 Dirac pairs against the interval oracle")
    rng = np.random.default_rng(3)
    parameters = np.round(rng.uniform(0.0, 3.0, size=(200, 2)), 2)
    for a, b in parameters.tolist():
        expected = dirac_oracle(a, b)
        assert levy_distance(dirac(a), dirac(b)) == pytest.approx(expected, abs=2 * ORACLE_STEP)


def test_levy_metric_axioms_on_random_ddfs():
    logger.info("Test: metric axioms on 1000 random triples")
    rng = np.random.default_rng(5)
    tol = 1e-6
    for _ in range(1000):
        F, G, K = (random_ddf(rng) for _ in range(3))
        d_fg = levy_distance(F, G, tol=tol)
        assert levy_distance(G, F, tol=tol) == d_fg
        assert 0.0 <= d_fg <= 1.0
        if F != G:
            assert d_fg > 0.0
        assert levy_distance(F, K, tol=tol) <= d_fg + levy_distance(G, K, tol=tol) + 2 * tol


def test_dirac_law_against_h_grid():
    logger.info("Test: d_L(H_a, H_0) = min(a, 1) for a = 0.05k")
    for k in range(1, 41):
        a = 0.05 * k
        expected = dirac_oracle(a, 0.0)
        assert abs(expected - min(a, 1.0)) <= ORACLE_STEP + 1e-12
        assert levy_distance(dirac(a), H0) == pytest.approx(min(a, 1.0), abs=2e-6)


def test_condition_examples():
    F = cap(0.2, 0.6)
    for h in (0.1, 0.5, 1.0):
        assert condition_holds(F, F, h)
    assert not condition_holds(H0, dirac(1.0), 0.5)
    assert condition_holds(dirac(1.0), H0, 1.0)


def test_condition_holds_at_one_and_rejects_bad_h():
    F, G = random_ddf(np.random.default_rng(1)), random_ddf(np.random.default_rng(2))
    assert condition_holds(F, G, 1.0)
    with pytest.raises(DomainError):
        condition_holds(F, G, 0.0)
    with pytest.raises(DomainError):
        condition_holds(F, G, 1.5)


def test_condition_is_monotone_in_h():
    logger.info("Test: (F, G; h) holding at h keeps holding at every larger h")
    rng = np.random.default_rng(17)
    for _ in range(300):
        F, G = random_ddf(rng, max_breakpoints=8), random_ddf(rng, max_breakpoints=8)
        h1, h2 = sorted(float(h) for h in rng.uniform(0.01, 1.0, size=2))
        if condition_holds(F, G, h1):
            assert condition_holds(F, G, h2)
        if not condition_holds(F, G, h2):
            assert not condition_holds(F, G, h1)


def test_levy_rejects_nonpositive_tol():
    with pytest.raises(DomainError):
        levy_distance(H0, dirac(0.5), tol=0.0)


def test_dist_to_h0_examples():
    logger.info("Test: closed-form distance to H_0")
    assert dist_to_h0(H0) == 0.0
    assert dist_to_h0(dirac(0.3)) == 0.3
    assert dist_to_h0(dirac(2.0)) == 1.0
    assert dist_to_h0(H_INF) == 1.0
    assert dist_to_h0(cap(0.2, 0.6)) == pytest.approx(0.4)


def test_dist_to_h0_agrees_with_bisection():
    logger.info("Test: closed form against bisection on 500 random d.d.f.s")
    rng = np.random.default_rng(9)
    for _ in range(500):
        F = random_ddf(rng, max_breakpoints=8)
        assert dist_to_h0(F) == pytest.approx(levy_distance(F, H0, tol=1e-7), abs=1e-6)


def test_dist_to_h0_is_antitone():
    logger.info("Test: a pointwise larger d.d.f. is no farther from H_0")
    rng = np.random.default_rng(19)
    for _ in range(500):
        F = random_ddf(rng, max_breakpoints=8)
        G = sup_family([F, random_ddf(rng, max_breakpoints=8)])
        assert leq(F, G)
        assert dist_to_h0(G) <= dist_to_h0(F) + 1e-9


def test_h0_ball_matches_distance():
    logger.info("Test: F(t) > 1 - t exactly when d_L(F, H_0) < t")
    rng = np.random.default_rng(13)
    for _ in range(300):
        F = random_ddf(rng, max_breakpoints=8)
        t = float(rng.uniform(0.01, 2.0))
        assert in_h0_ball(F, t) == (dist_to_h0(F) < t)


def test_h0_ball_examples():
    for t in (1e-3, 0.5, 3.0):
        assert in_h0_ball(H0, t)
    assert in_h0_ball(dirac(0.3), 0.5)
    assert not in_h0_ball(dirac(0.3), 0.2)


def test_eps_lambda_ball():
    F = cap(0.2, 0.6)
    assert in_eps_lambda_ball(F, 0.3, 0.5)
    assert not in_eps_lambda_ball(F, 0.3, 0.4)
    assert not in_eps_lambda_ball(F, 0.2, 0.9)
    with pytest.raises(DomainError):
        in_eps_lambda_ball(F, 0.3, 1.0)
    with pytest.raises(DomainError):
        in_h0_ball(F, -1.0)
    assert math.isclose(dist_to_h0(F), 0.4)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
