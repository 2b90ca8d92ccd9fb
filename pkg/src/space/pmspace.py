"""Finite probabilistic metric spaces and their axiom check."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from loguru import logger

from ..ddf.core import DDF, H0, dirac, first_violation, leq
from ..ddf.triangle import TNormKind, TriangleFn
from ..schemas.report import CheckReport
from ..utils.validation import DomainError, require_index, require_nonempty


@dataclass(frozen=True)
class SubsetRef:
    """Nonempty set of point indices into a PMSpace."""
    indices: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", frozenset(int(i) for i in self.indices))
        require_nonempty("subset", self.indices)

    @classmethod
    def of(cls, indices: "SubsetRef | Iterable[int]") -> "SubsetRef":
        return indices if isinstance(indices, SubsetRef) else cls(frozenset(indices))

    def __iter__(self):
        return iter(sorted(self.indices))

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, index: object) -> bool:
        return index in self.indices


@dataclass(frozen=True)
class PointSeq:
    """Finite prefix p_1, ..., p_n of a sequence of points, as indices."""
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        require_nonempty("sequence", self.indices)

    @classmethod
    def of(cls, indices: "PointSeq | Iterable[int]") -> "PointSeq":
        return indices if isinstance(indices, PointSeq) else cls(tuple(indices))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __getitem__(self, position: int) -> int:
        return self.indices[position]


@dataclass(frozen=True)
class PMSpace:
    """Points, the symmetric matrix of d.d.f.s F_pq and a triangle function.

    Construction only checks the shape; the PM axioms are checked by
    :func:`validate`.
    """
    labels: tuple[str, ...]
    dist: tuple[tuple[DDF, ...], ...]
    tau: TriangleFn

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        dist = tuple(tuple(row) for row in self.dist)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dist", dist)
        require_nonempty("points", labels)
        if len(set(labels)) != len(labels):
            raise DomainError("point labels must be unique")
        if len(dist) != len(labels) or any(len(row) != len(labels) for row in dist):
            raise DomainError(f"distance matrix must be {len(labels)}x{len(labels)}")

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def everything(self) -> SubsetRef:
        return SubsetRef(frozenset(range(self.size)))

    def F(self, p: int, q: int) -> DDF:
        return self.dist[p][q]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError(f"unknown point label {label!r}") from None

    def names(self, indices: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in sorted(indices)]

    def check_subset(self, A: SubsetRef | Iterable[int]) -> SubsetRef:
        A = SubsetRef.of(A)
        for i in A.indices:
            require_index("point", i, self.size)
        return A

    def check_sequence(self, seq: PointSeq | Iterable[int]) -> PointSeq:
        seq = PointSeq.of(seq)
        for i in seq:
            require_index("point", i, self.size)
        return seq


def subset(space: PMSpace, labels: Iterable[str]) -> SubsetRef:
    """SubsetRef for the named points."""
    return SubsetRef(frozenset(space.index(label) for label in labels))


def validate(space: PMSpace) -> CheckReport:
    """Check the PM space axioms.

    (a) F_pp = H_0, (b) F_pq != H_0 for p != q, (c) F_pq = F_qp and
    (d) F_pr >= tau(F_pq, F_qr). The first violation found, in that axiom
    order, becomes the witness.
    """
    n = space.size
    for p in range(n):
        F = space.F(p, p)
        if F != H0:
            return _axiom_failure(space, "a", [p], first_violation(H0, F))
    for p in range(n):
        for q in range(n):
            if p != q and space.F(p, q) == H0:
                return _axiom_failure(space, "b", [p, q], None)
    for p in range(n):
        for q in range(p + 1, n):
            F, G = space.F(p, q), space.F(q, p)
            if F != G:
                x = first_violation(F, G)
                return _axiom_failure(space, "c", [p, q], x if x is not None else first_violation(G, F))
    for p in range(n):
        for q in range(n):
            for r in range(n):
                combined = space.tau(space.F(p, q), space.F(q, r))
                if not leq(combined, space.F(p, r)):
                    return _axiom_failure(space, "d", [p, q, r], first_violation(combined, space.F(p, r)))
    logger.debug(f"validated {n}-point space under {space.tau.name}")
    return CheckReport.success("validate", [("points", n), ("tau", space.tau.name)])


def _axiom_failure(space: PMSpace, axiom: str, points: list[int], x: float | None) -> CheckReport:
    witnesses = [("axiom", axiom), ("points", [space.labels[i] for i in points])]
    if x is not None:
        witnesses.append(("x", x))
    return CheckReport.failure("validate", witnesses)


def from_metric(
    labels: Sequence[str],
    d: Sequence[Sequence[float]],
    T: TNormKind = TNormKind.T_M,
    tau: TriangleFn | None = None,
) -> PMSpace:
    """Embed a finite metric space as F_pq = H_{d(p,q)}.

    The triangle function defaults to tau_T; pass ``tau`` to build a Wald
    space over the convolution instead.

    Raises:
        DomainError: If d is not a metric, naming the violated axiom
    """
    n = len(labels)
    require_nonempty("labels", labels)
    if len(d) != n or any(len(row) != n for row in d):
        raise DomainError(f"metric matrix must be {n}x{n}")
    for p in range(n):
        for q in range(n):
            value = d[p][q]
            if not math.isfinite(value) or value < 0:
                raise DomainError(f"nonnegativity: d({labels[p]},{labels[q]})={value!r}")
        if d[p][p] != 0:
            raise DomainError(f"zero diagonal: d({labels[p]},{labels[p]})={d[p][p]!r}")
    for p in range(n):
        for q in range(p + 1, n):
            if d[p][q] != d[q][p]:
                raise DomainError(f"symmetry: d({labels[p]},{labels[q]}) != d({labels[q]},{labels[p]})")
            if d[p][q] == 0:
                raise DomainError(f"positivity: d({labels[p]},{labels[q]})=0 for distinct points")
    for p in range(n):
        for q in range(n):
            for r in range(n):
                if d[p][r] > d[p][q] + d[q][r]:
                    raise DomainError(
                        f"triangle inequality: d({labels[p]},{labels[r]})={d[p][r]} > "
                        f"d({labels[p]},{labels[q]})+d({labels[q]},{labels[r]})={d[p][q] + d[q][r]}"
                    )
    dist = tuple(tuple(dirac(float(d[p][q])) for q in range(n)) for p in range(n))
    return PMSpace(tuple(labels), dist, tau or TriangleFn.tau_t(T))
