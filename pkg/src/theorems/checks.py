"""Executable checks of the diameter, boundedness, Cantor, Baire and Heine-Borel theorems.

Every check returns a CheckReport. An implication whose hypothesis fails
on the instance is a vacuous pass naming the hypothesis; it never counts
as evidence.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Sequence

from loguru import logger

from ..ddf.core import DDF, H0, evaluate, leq
from ..ddf.levy import dist_to_h0
from ..ddf.triangle import tnorm_eval
from ..schemas.report import BoundednessKind, CheckReport
from ..space.diameter import TotalBoundednessMode, classify_boundedness, prob_diameter, totally_bounded
from ..space.pmspace import PMSpace, PointSeq, SubsetRef
from ..space.sequences import converges, is_cauchy
from ..space.topology import (
    candidate_radii,
    closure,
    is_closed,
    is_dense,
    is_open,
    neighborhood,
    open_radius,
    separate_points,
)
from ..utils.validation import DomainError, require_nonempty, require_open_unit_interval, require_positive
from .runner import CheckRunner

DEFAULT_EPS_GRID = (0.5, 0.25, 0.1, 0.01, 0.001)
# final-diameter threshold for "D_{S_n} -> H_0"
CANTOR_DIAMETER_TOL = 1e-6

DIAMETER_ITEMS = {
    1: "D_A is a d.d.f.",
    2: "D_A = H_0 iff A is a singleton",
    3: "A subset of B implies D_A >= D_B",
    4: "F_pq >= D_A for p, q in A",
    5: "D_{p,q} = F_pq",
    6: "D_{A u B} >= tau(D_A, D_B) when A and B meet",
    7: "D_A = D_{closure of A}",
}


def diameter_report(space: PMSpace, max_subset_size: int = 3) -> CheckReport:
    """Check the seven diameter properties on every subset up to the size cap.

    Raises:
        DomainError: If max_subset_size < 2
    """
    if max_subset_size < 2:
        raise DomainError(f"max_subset_size must be >= 2, got {max_subset_size}")
    subsets = [
        frozenset(c)
        for k in range(1, min(max_subset_size, space.size) + 1)
        for c in combinations(range(space.size), k)
    ]
    cache: dict[frozenset[int], DDF] = {}

    def D(A: frozenset[int]) -> DDF:
        if A not in cache:
            cache[A] = prob_diameter(space, A)
        return cache[A]

    violations: dict[int, list[list[str]]] = {item: [] for item in DIAMETER_ITEMS}
    for A in subsets:
        DA = D(A)
        if evaluate(DA, 0.0) != 0.0:
            violations[1].append(space.names(A))
        if (DA == H0) != (len(A) == 1):
            violations[2].append(space.names(A))
        if len(A) > 1:
            for e in sorted(A):
                if not leq(DA, D(A - {e})):
                    violations[3].append(space.names(A))
        if any(not leq(DA, space.F(p, q)) for p in A for q in A):
            violations[4].append(space.names(A))
        if len(A) == 2:
            p, q = sorted(A)
            if DA != space.F(p, q):
                violations[5].append(space.names(A))
        if D(closure(space, A)) != DA:
            violations[7].append(space.names(A))
    for i, A in enumerate(subsets):
        for B in subsets[i + 1:]:
            if A & B and not leq(space.tau(D(A), D(B)), D(A | B)):
                violations[6].append(space.names(A) + ["|"] + space.names(B))

    sub_reports = []
    for item, description in DIAMETER_ITEMS.items():
        name = f"diameter_item_{item}"
        if violations[item]:
            sub_reports.append(
                CheckReport.failure(name, [("property", description), ("subset", violations[item][0])])
            )
        else:
            sub_reports.append(CheckReport.success(name, [("property", description)]))
    diagnostics = {"violations": [float(len(violations[item])) for item in DIAMETER_ITEMS]}
    failing = [report for report in sub_reports if not report.passed]
    logger.debug(f"diameter_report: {len(subsets)} subsets, {len(failing)} failing item(s)")
    if failing:
        first = failing[0]
        return CheckReport.failure(
            "diameter_report",
            [("item", first.name), ("subset", first.witness("subset"))],
            diagnostics,
            sub_reports,
        )
    return CheckReport.success("diameter_report", [("subsets", len(subsets))], diagnostics, sub_reports)


def _check_grid(eps_grid: Sequence[float]) -> list[float]:
    require_nonempty("eps_grid", eps_grid)
    return [require_positive("eps", float(eps)) for eps in eps_grid]


def two_eps_report(space: PMSpace, A: SubsetRef | Iterable[int], eps_grid: Sequence[float]) -> CheckReport:
    """F_pq(2 eps) >= T(F_pm(eps), F_mq(eps)) for p, m, q in A.

    T is the t-norm of a Menger space, or T_P for the convolution.
    """
    A = space.check_subset(A)
    T = space.tau.value_tnorm
    for eps in _check_grid(eps_grid):
        for p in A:
            for m in A:
                for q in A:
                    bound = tnorm_eval(T, evaluate(space.F(p, m), eps), evaluate(space.F(m, q), eps))
                    if evaluate(space.F(p, q), 2 * eps) < bound:
                        return CheckReport.failure(
                            "two_eps",
                            [("points", [space.labels[p], space.labels[m], space.labels[q]]), ("eps", eps)],
                        )
    return CheckReport.success("two_eps", [("tnorm", T.value)])


def tb_bounded_report(space: PMSpace, A: SubsetRef | Iterable[int], eps_grid: Sequence[float]) -> CheckReport:
    """Totally bounded (strong reading) at every grid eps implies bounded."""
    A = space.check_subset(A)
    grid = _check_grid(eps_grid)
    boundedness = classify_boundedness(space, A)
    menger = two_eps_report(space, A, grid)
    witnesses = [("kind", boundedness.kind.value), ("sup_value", boundedness.sup_value)]

    for eps in grid:
        strong = totally_bounded(space, A, eps, TotalBoundednessMode.STRONG)
        if not strong.passed:
            return CheckReport.vacuous_pass(
                "tb_bounded",
                "strong total boundedness",
                witnesses + [("eps", eps)],
                sub_reports=[strong, menger],
            )
    if boundedness.kind is not BoundednessKind.BOUNDED:
        return CheckReport.failure("tb_bounded", witnesses, sub_reports=[menger])
    if not menger.passed:
        return CheckReport.failure("tb_bounded", menger.witnesses, sub_reports=[menger])
    return CheckReport.success("tb_bounded", witnesses, sub_reports=[menger])


def subsequence_check(
    space: PMSpace,
    seq: PointSeq | Iterable[int],
    sub_indices: Sequence[int],
    p0: int,
    eps: float,
    lam: float,
) -> CheckReport:
    """A Cauchy sequence with a subsequence converging to p0 converges to p0.

    On a finite prefix the conclusion is checked from the Cauchy n_0 on in
    the form the triangle inequality delivers: F_{p_n,p0}(2 eps) >=
    T(1 - lam, 1 - lam), anchored at a subsequence element inside both
    tails. The plain (eps, lam) convergence report is attached.

    Raises:
        DomainError: If sub_indices is empty, out of range or not strictly increasing
    """
    seq = space.check_sequence(seq)
    positions = list(sub_indices)
    if (
        not positions
        or any(not 0 <= k < len(seq) for k in positions)
        or any(b <= a for a, b in zip(positions, positions[1:]))
    ):
        raise DomainError("sub_indices must be strictly increasing positions into the sequence")

    cauchy = is_cauchy(space, seq, eps, lam)
    sub_converges = converges(space, [seq[k] for k in positions], p0, eps, lam)
    plain = converges(space, seq, p0, eps, lam)
    sub_reports = [cauchy, sub_converges, plain]
    if not cauchy.passed:
        return CheckReport.vacuous_pass("subsequence", "Cauchy sequence", sub_reports=sub_reports)
    if not sub_converges.passed:
        return CheckReport.vacuous_pass("subsequence", "convergent subsequence", sub_reports=sub_reports)

    start = cauchy.witness("n0") - 1
    anchors = [k for k in positions[sub_converges.witness("n0") - 1:] if k >= start]
    if not anchors:
        return CheckReport.vacuous_pass(
            "subsequence", "subsequence tail inside the Cauchy tail", sub_reports=sub_reports
        )
    bound = tnorm_eval(space.tau.value_tnorm, 1.0 - lam, 1.0 - lam)
    for n in range(start, len(seq)):
        value = evaluate(space.F(seq[n], p0), 2 * eps)
        if value < bound:
            return CheckReport.failure(
                "subsequence",
                [("n", n + 1), ("point", space.labels[seq[n]]), ("value", value), ("bound", bound)],
                sub_reports=sub_reports,
            )
    return CheckReport.success(
        "subsequence", [("n0", start + 1), ("anchor", anchors[0] + 1), ("bound", bound)], sub_reports=sub_reports
    )


def _intersection(space: PMSpace, sets: Sequence[SubsetRef | Iterable[int]]) -> tuple[list[frozenset[int]], frozenset[int]]:
    members = [space.check_subset(A).indices for A in sets]
    return members, frozenset.intersection(*members)


def cantor_check(space: PMSpace, nested: Sequence[SubsetRef | Iterable[int]]) -> CheckReport:
    """Nested closed sets whose diameters tend to H_0 meet in exactly one point."""
    require_nonempty("nested", nested)
    members, common = _intersection(space, nested)
    trace = [dist_to_h0(prob_diameter(space, A)) for A in members]
    diagnostics = {"diameter_dist_to_h0": trace}

    for k, A in enumerate(members):
        if not is_closed(space, A).passed:
            return CheckReport.vacuous_pass("cantor", "closed sets", [("set", k)], diagnostics)
    for k in range(len(members) - 1):
        if not members[k + 1] <= members[k]:
            return CheckReport.vacuous_pass("cantor", "nested decreasing", [("set", k + 1)], diagnostics)
    if trace[-1] >= CANTOR_DIAMETER_TOL:
        return CheckReport.vacuous_pass(
            "cantor", "diameters tend to H_0", [("final_dist_to_h0", trace[-1])], diagnostics
        )
    if len(common) == 1:
        return CheckReport.success("cantor", [("intersection", space.names(common))], diagnostics)
    return CheckReport.failure("cantor", [("intersection", space.names(common))], diagnostics)


def baire_check(space: PMSpace, open_dense_sets: Sequence[SubsetRef | Iterable[int]]) -> CheckReport:
    """The intersection of open dense sets is nonempty and dense."""
    require_nonempty("open_dense_sets", open_dense_sets)
    members, common = _intersection(space, open_dense_sets)
    for k, G in enumerate(members):
        if not is_open(space, G).passed:
            return CheckReport.vacuous_pass("baire", "open sets", [("set", k)])
        if not is_dense(space, G).passed:
            return CheckReport.vacuous_pass("baire", "dense sets", [("set", k)])
    if not common:
        return CheckReport.failure("baire", [("intersection", [])])
    dense = is_dense(space, common)
    if not dense.passed:
        return CheckReport.failure(
            "baire", [("intersection", space.names(common))] + [(w.label, w.value) for w in dense.witnesses]
        )
    return CheckReport.success("baire", [("intersection", space.names(common))])


def _grid_in_unit_interval(eps_grid: Sequence[float] | None) -> list[float]:
    grid = list(DEFAULT_EPS_GRID if eps_grid is None else eps_grid)
    require_nonempty("eps_grid", grid)
    return [require_open_unit_interval("t", float(t)) for t in grid]


def _sequences_in(space: PMSpace, E: SubsetRef, seqs: Sequence[PointSeq | Iterable[int]]) -> list[PointSeq]:
    checked = []
    for s, seq in enumerate(seqs):
        seq = space.check_sequence(seq)
        if any(point not in E for point in seq):
            raise DomainError(f"sequence {s} leaves E")
        checked.append(seq)
    return checked


def completeness_report(
    space: PMSpace,
    E: SubsetRef | Iterable[int],
    seqs: Sequence[PointSeq | Iterable[int]],
    eps_grid: Sequence[float] | None = None,
) -> CheckReport:
    """Every sequence in E that is Cauchy at (t, t) converges at (t, t) to a point of E.

    Raises:
        DomainError: If a sequence leaves E or a grid value is outside (0, 1)
    """
    E = space.check_subset(E)
    grid = _grid_in_unit_interval(eps_grid)
    limits = []
    for s, seq in enumerate(_sequences_in(space, E, seqs)):
        for t in grid:
            if not is_cauchy(space, seq, t, t).passed:
                continue
            limit = next((p for p in E if converges(space, seq, p, t, t).passed), None)
            if limit is None:
                return CheckReport.failure("completeness", [("sequence", s), ("t", t)])
            limits.append([s, t, space.labels[limit]])
    return CheckReport.success("completeness", [("limits", limits)])


def neighborhood_system_report(space: PMSpace) -> CheckReport:
    """Strong neighbourhoods are open and distinct points are separated."""
    opens: CheckReport | None = None
    for p in range(space.size):
        for t in candidate_radii(space, p):
            ball = neighborhood(space, p, t)
            for q in sorted(ball):
                if open_radius(space, q, ball) is None:
                    opens = CheckReport.failure(
                        "open_neighborhoods",
                        [("point", space.labels[p]), ("t", t), ("inner_point", space.labels[q])],
                    )
                    break
            if opens:
                break
        if opens:
            break
    opens = opens or CheckReport.success("open_neighborhoods", [("points", space.size)])

    hausdorff = CheckReport.success("hausdorff", [("pairs", space.size * (space.size - 1) // 2)])
    for p, q in combinations(range(space.size), 2):
        separated = separate_points(space, p, q)
        if not separated.passed:
            hausdorff = CheckReport.failure("hausdorff", [(w.label, w.value) for w in separated.witnesses])
            break

    sub_reports = [opens, hausdorff]
    failing = [report for report in sub_reports if not report.passed]
    if failing:
        return CheckReport.failure("neighborhood_system", [("property", failing[0].name)] + [
            (w.label, w.value) for w in failing[0].witnesses
        ], sub_reports=sub_reports)
    return CheckReport.success("neighborhood_system", [("points", space.size)], sub_reports=sub_reports)


def _complete_and_totally_bounded(
    space: PMSpace, E: SubsetRef, seqs: list[PointSeq], grid: list[float]
) -> CheckReport:
    complete = completeness_report(space, E, seqs, grid)
    covers = [totally_bounded(space, E, t, TotalBoundednessMode.COVER) for t in grid]
    sub_reports = [complete] + covers
    failing = [report for report in sub_reports if not report.passed]
    if failing:
        return CheckReport.failure("complete_totally_bounded", failing[0].witnesses, sub_reports=sub_reports)
    return CheckReport.success("complete_totally_bounded", [("eps_grid", grid)], sub_reports=sub_reports)


def _bolzano_weierstrass(space: PMSpace, E: SubsetRef, seqs: list[PointSeq], grid: list[float]) -> CheckReport:
    picks = []
    for s, seq in enumerate(seqs):
        # pigeonhole: the most frequent point recurs along a subsequence
        limit, _ = Counter(seq.indices).most_common(1)[0]
        positions = [k for k, point in enumerate(seq) if point == limit]
        for t in grid:
            report = converges(space, [seq[k] for k in positions], limit, t, t)
            if not report.passed or limit not in E:
                return CheckReport.failure("bolzano_weierstrass", [("sequence", s), ("t", t)])
        picks.append([s, space.labels[limit], [k + 1 for k in positions]])
    return CheckReport.success("bolzano_weierstrass", [("subsequences", picks)])


def _heine_borel(space: PMSpace, E: SubsetRef, covers: list[list[frozenset[int]]]) -> CheckReport:
    subcovers = []
    skipped = []
    for c, cover in enumerate(covers):
        if not E.indices <= frozenset().union(*cover):
            logger.warning(f"cover {c} does not cover E; ignored")
            skipped.append(c)
            continue
        uncovered = set(E.indices)
        chosen: list[int] = []
        while uncovered:
            k = max(range(len(cover)), key=lambda i: len(cover[i] & uncovered))
            chosen.append(k)
            uncovered -= cover[k]
        subcovers.append([c, chosen])
    return CheckReport.success("heine_borel", [("subcovers", subcovers), ("skipped", skipped)])


def heine_borel_report(
    space: PMSpace,
    E: SubsetRef | Iterable[int],
    seqs: Sequence[PointSeq | Iterable[int]],
    covers: Sequence[Sequence[SubsetRef | Iterable[int]]],
    eps_grid: Sequence[float] | None = None,
    runner: CheckRunner | None = None,
) -> CheckReport:
    """Completeness with total boundedness, Bolzano-Weierstrass and Heine-Borel on E.

    The three characterisations run concurrently; the report passes when
    they agree.

    Raises:
        DomainError: If a cover element is not open or a sequence leaves E
    """
    E = space.check_subset(E)
    grid = _grid_in_unit_interval(eps_grid)
    checked_seqs = _sequences_in(space, E, seqs)
    checked_covers = []
    for c, cover in enumerate(covers):
        members = [space.check_subset(U).indices for U in cover]
        for k, U in enumerate(members):
            if not is_open(space, U).passed:
                raise DomainError(f"cover {c} element {k} is not open")
        checked_covers.append(members)

    runner = runner or CheckRunner()
    sub_reports = runner.gather([
        ("complete_totally_bounded", lambda: _complete_and_totally_bounded(space, E, checked_seqs, grid)),
        ("bolzano_weierstrass", lambda: _bolzano_weierstrass(space, E, checked_seqs, grid)),
        ("heine_borel", lambda: _heine_borel(space, E, checked_covers)),
    ])
    verdicts = {report.name: report.passed for report in sub_reports}
    if len(set(verdicts.values())) == 1:
        return CheckReport.success("heine_borel_report", [("verdicts", verdicts)], sub_reports=sub_reports)
    return CheckReport.failure("heine_borel_report", [("verdicts", verdicts)], sub_reports=sub_reports)
