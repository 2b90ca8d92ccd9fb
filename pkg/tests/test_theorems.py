"""Tests for the executable diameter, boundedness, Cantor, Baire and Heine-Borel checks."""
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
    from_metric,
    prob_diameter,
    random_menger_space,
    random_metric,
    random_simple_space,
)
from src.theorems import (
    baire_check,
    cantor_check,
    completeness_report,
    diameter_report,
    heine_borel_report,
    neighborhood_system_report,
    subsequence_check,
    tb_bounded_report,
    two_eps_report,
)
from src.utils.validation import DomainError

TAU_M = TriangleFn.tau_t(TNormKind.T_M)
P, Q = 0, 1


def pair_space(F) -> PMSpace:
    return PMSpace(("p", "q"), ((H0, F), (F, H0)), TAU_M)


def unit_triangle() -> PMSpace:
    return from_metric(["p", "q", "r"], [[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def random_space(rng: np.random.Generator) -> PMSpace:
    n = int(rng.integers(1, 7))
    if rng.random() < 0.5:
        return random_simple_space(rng, n)
    return random_menger_space(rng, n, T=TNormKind(rng.choice(["T_M", "T_P", "T_L"])))


def random_chain(rng: np.random.Generator, n: int, final_size: int) -> list[list[int]]:
    order = [int(i) for i in rng.permutation(n)]
    sizes = sorted({n, final_size, *[int(k) for k in rng.integers(final_size, n + 1, size=2)]}, reverse=True)
    return [order[:size] for size in sizes]


# Diameter properties

def test_diameter_report_examples():
    logger.info("Test: diameter report on a 4-point metric")
    space = from_metric(
        ["a", "b", "c", "d"],
        [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]],
    )
    report = diameter_report(space, 3)
    assert report.passed
    assert len(report.sub_reports) == 7
    assert all(sub.passed for sub in report.sub_reports)
    assert report.diagnostic("violations") == [0.0] * 7
    assert report.witness("subsets") == 4 + 6 + 4
    with pytest.raises(DomainError):
        diameter_report(space, 1)


def test_diameter_report_flags_broken_axioms():
    # F_pq = H_0 for p != q makes D_{p,q} = H_0 on a non-singleton
    report = diameter_report(pair_space(H0), 2)
    assert not report.passed
    assert report.witness("item") == "diameter_item_2"
    assert report.witness("subset") == ["p", "q"]


def test_diameter_report_on_random_spaces():
    logger.info("Test: seven diameter properties on 50 random spaces")
    rng = np.random.default_rng(101)
    for _ in range(50):
        space = random_space(rng)
        report = diameter_report(space, 4)
        assert report.passed, report.witnesses
        assert sum(report.diagnostic("violations")) == 0


# Totally bounded implies bounded

def test_tb_bounded_examples():
    logger.info("Test: totally bounded implies bounded")
    space = unit_triangle()
    report = tb_bounded_report(space, range(3), [2.0, 3.0])
    assert report.passed and not report.vacuous
    assert report.witness("kind") == "bounded"

    report = tb_bounded_report(space, {0}, [0.1])
    assert report.passed and not report.vacuous

    report = tb_bounded_report(pair_space(cap(0.2, 0.6)), {0, 1}, [0.1, 0.5, 5.0])
    assert report.passed and report.vacuous
    assert report.unmet_hypothesis == "strong total boundedness"
    assert report.witness("kind") == "semi-bounded"
    assert report.witness("sup_value") == 0.6

    with pytest.raises(DomainError):
        tb_bounded_report(space, range(3), [])


def test_tb_bounded_on_random_menger_spaces():
    rng = np.random.default_rng(103)
    met = 0
    for _ in range(50):
        space = random_menger_space(rng, int(rng.integers(1, 7)), T=TNormKind.T_P)
        diameter = max(max(row) for row in [[F.xs[0] if F.xs else 0.0 for F in r] for r in space.dist])
        for grid in ([0.5], [diameter + 0.5], [diameter + 0.5, diameter + 1.0]):
            report = tb_bounded_report(space, range(space.size), grid)
            assert report.passed
            if not report.vacuous:
                met += 1
                assert report.witness("kind") == "bounded"
    assert met >= 100


def test_two_eps_bound_on_random_spaces():
    rng = np.random.default_rng(107)
    for _ in range(30):
        space = random_space(rng)
        assert two_eps_report(space, range(space.size), [0.25, 0.5, 1.0, 2.5]).passed


def test_two_eps_bound_under_convolution():
    rng = np.random.default_rng(109)
    n = 4
    space = from_metric([f"p{i}" for i in range(n)], random_metric(rng, n), tau=TriangleFn.convolution())
    report = two_eps_report(space, range(n), [0.5, 1.5, 3.0])
    assert report.passed
    assert report.witness("tnorm") == "T_P"


# Cauchy sequences with convergent subsequences

def test_subsequence_examples():
    logger.info("Test: Cauchy sequence with a convergent subsequence")
    space = pair_space(dirac(1.0))
    report = subsequence_check(space, [Q, P, P, P, P], [1, 2, 3, 4], P, 0.5, 0.5)
    assert report.passed and not report.vacuous
    assert report.witness("n0") == 2
    assert report.witness("bound") == 0.5
    assert report.sub_report("converges").passed

    report = subsequence_check(space, [P, P, P, P], [0, 2], P, 0.5, 0.5)
    assert report.passed and not report.vacuous

    report = subsequence_check(space, [P, Q, P, Q, P, Q], [0, 2, 4], P, 0.5, 0.5)
    assert report.vacuous
    assert report.unmet_hypothesis == "Cauchy sequence"

    report = subsequence_check(space, [P, P, P, P], [0, 1], Q, 0.5, 0.5)
    assert report.vacuous
    assert report.unmet_hypothesis == "convergent subsequence"


def test_subsequence_rejects_bad_positions():
    space = pair_space(dirac(1.0))
    for positions in ([], [2, 1], [0, 9], [1, 1]):
        with pytest.raises(DomainError):
            subsequence_check(space, [P, P, P], positions, P, 0.5, 0.5)


def test_subsequence_on_random_sequences():
    rng = np.random.default_rng(113)
    for _ in range(50):
        space = random_space(rng)
        seq = [int(i) for i in rng.integers(0, space.size, size=8)]
        sub = sorted({int(k) for k in rng.integers(0, 8, size=4)})
        p0 = int(rng.integers(0, space.size))
        report = subsequence_check(space, seq, sub, p0, 0.5, 0.3)
        assert report.passed


def test_subsequence_concludes_at_twice_eps():
    logger.info("Test: the conclusion holds at 2 eps where plain (eps, lam) convergence fails")
    # d(a, p) = 0.5 is not below eps, but the anchor b sits 0.25 from both
    space = from_metric(["p", "a", "b"], [[0, 0.5, 0.25], [0.5, 0, 0.25], [0.25, 0.25, 0]])
    p, a, b = 0, 1, 2
    report = subsequence_check(space, [b, a, b, a], [0, 2], p, 0.5, 0.5)
    assert report.passed and not report.vacuous
    assert report.witness("anchor") == 1
    assert report.witness("bound") == 0.5
    cauchy, sub_converges, plain = report.sub_reports
    assert cauchy.passed and sub_converges.passed
    assert not plain.passed



# Cantor intersection

def test_cantor_examples():
    logger.info("Test: nested closed sets")
    space = unit_triangle()
    report = cantor_check(space, [{0, 1, 2}, {0, 1}, {0}])
    assert report.passed and not report.vacuous
    assert report.witness("intersection") == ["p"]
    assert report.diagnostic("diameter_dist_to_h0") == [1.0, 1.0, 0.0]

    report = cantor_check(space, [{0, 1, 2}, {0, 1}])
    assert report.vacuous
    assert report.unmet_hypothesis == "diameters tend to H_0"

    assert cantor_check(space, [{0}]).passed

    report = cantor_check(space, [{0, 1}, {1, 2}, {2}])
    assert report.vacuous
    assert report.unmet_hypothesis == "nested decreasing"

    report = cantor_check(pair_space(H0), [{0}])
    assert report.vacuous
    assert report.unmet_hypothesis == "closed sets"

    with pytest.raises(DomainError):
        cantor_check(space, [])


def test_cantor_on_random_chains():
    logger.info("Test: Cantor on 50 random spaces")
    rng = np.random.default_rng(127)
    for _ in range(50):
        space = random_space(rng)
        chain = random_chain(rng, space.size, 1)
        report = cantor_check(space, chain)
        assert report.passed and not report.vacuous
        assert len(report.witness("intersection")) == 1

        if space.size >= 2:
            chain = random_chain(rng, space.size, 2)
            report = cantor_check(space, chain)
            assert report.vacuous
            assert report.unmet_hypothesis == "diameters tend to H_0"


def test_cantor_matches_metric_diameter():
    rng = np.random.default_rng(131)
    for _ in range(20):
        n = int(rng.integers(2, 7))
        d = random_metric(rng, n)
        space = from_metric([f"p{i}" for i in range(n)], d)
        for final_size in range(1, n + 1):
            chain = random_chain(rng, n, final_size)
            final = chain[-1]
            metric_diameter = max(d[p][q] for p in final for q in final)
            report = cantor_check(space, chain)
            assert report.vacuous == (metric_diameter > 0)


# Baire intersection

def test_baire_examples():
    logger.info("Test: open dense families")
    space = unit_triangle()
    everything = set(range(3))
    report = baire_check(space, [everything, everything])
    assert report.passed and not report.vacuous
    assert report.witness("intersection") == ["p", "q", "r"]

    report = baire_check(space, [everything, {0, 1}])
    assert report.vacuous
    assert report.unmet_hypothesis == "dense sets"

    report = baire_check(pair_space(H0), [{0}])
    assert report.vacuous
    assert report.unmet_hypothesis == "open sets"


def test_baire_on_random_spaces():
    rng = np.random.default_rng(137)
    for _ in range(50):
        space = random_space(rng)
        family = [range(space.size)] * int(rng.integers(1, 4))
        assert baire_check(space, family).passed
        if space.size >= 2:
            missing = int(rng.integers(0, space.size))
            family = family + [[p for p in range(space.size) if p != missing]]
            report = baire_check(space, family)
            assert report.vacuous


# Compactness characterisations

def test_heine_borel_examples():
    logger.info("Test: compactness characterisations agree")
    space = unit_triangle()
    seqs = [[0, 1, 0, 0, 2, 0], [2, 2, 2]]
    covers = [[{0}, {1}, {2}], [{0, 1, 2}], [{0, 1}, {1, 2}, {2}]]
    report = heine_borel_report(space, range(3), seqs, covers)
    assert report.passed
    assert report.witness("verdicts") == {
        "complete_totally_bounded": True,
        "bolzano_weierstrass": True,
        "heine_borel": True,
    }
    subcovers = report.sub_report("heine_borel").witness("subcovers")
    assert subcovers[1] == [1, [0]]
    picks = report.sub_report("bolzano_weierstrass").witness("subsequences")
    assert picks[0] == [0, "p", [1, 3, 4, 6]]
    assert picks[1] == [1, "r", [1, 2, 3]]


def test_heine_borel_input_errors():
    space = unit_triangle()
    with pytest.raises(DomainError, match="is not open"):
        heine_borel_report(pair_space(H0), [0, 1], [], [[{0}, {1}]])
    with pytest.raises(DomainError, match="leaves E"):
        heine_borel_report(space, {0, 1}, [[0, 2]], [])
    report = heine_borel_report(space, {0, 1}, [[0, 1, 1]], [[{0}], [{0}, {1}]])
    assert report.passed
    assert report.sub_report("heine_borel").witness("skipped") == [0]


def test_heine_borel_on_random_spaces():
    logger.info("Test: Heine-Borel report on 50 random spaces")
    rng = np.random.default_rng(139)
    for _ in range(50):
        space = random_space(rng)
        n = space.size
        seqs = [[int(i) for i in rng.integers(0, n, size=int(rng.integers(1, 9)))] for _ in range(3)]
        labels = rng.integers(0, 3, size=n)
        partition = [{p for p in range(n) if labels[p] == k} for k in range(3)]
        covers = [[{p} for p in range(n)], [set(range(n))], [part for part in partition if part]]
        report = heine_borel_report(space, range(n), seqs, covers)
        assert report.passed
        assert all(sub.passed for sub in report.sub_reports)


def test_completeness_report():
    space = unit_triangle()
    report = completeness_report(space, range(3), [[1, 2, 0, 0, 0]])
    assert report.passed
    assert all(limit[2] == "p" for limit in report.witness("limits"))
    with pytest.raises(DomainError):
        completeness_report(space, range(3), [[0]], [1.5])


def test_neighborhood_system_report():
    rng = np.random.default_rng(149)
    for _ in range(20):
        report = neighborhood_system_report(random_space(rng))
        assert report.passed
        assert report.sub_report("hausdorff").passed
        assert report.sub_report("open_neighborhoods").passed
    report = neighborhood_system_report(pair_space(H0))
    assert not report.passed
    assert report.witness("property") == "hausdorff"


def test_diameters_of_chain_shrink():
    space = unit_triangle()
    chain = [{0, 1, 2}, {0, 1}, {0}]
    diameters = [prob_diameter(space, A) for A in chain]
    assert diameters[-1] == H0
    assert all(len(A) >= len(B) for A, B in combinations(chain, 2))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
