"""Finite PM spaces: axioms, strong topology, sequences and diameter."""
from .diameter import TotalBoundednessMode, classify_boundedness, prob_diameter, totally_bounded
from .pmspace import PMSpace, PointSeq, SubsetRef, from_metric, subset, validate
from .sampling import random_menger_space, random_metric, random_profile, random_simple_space
from .sequences import converges, is_cauchy
from .topology import (
    candidate_radii,
    closure,
    eps_lambda_neighborhood,
    is_closed,
    is_dense,
    is_open,
    neighborhood,
    neighborhood_by_levy,
    open_radius,
    separate_points,
)

__all__ = [
    "PMSpace",
    "PointSeq",
    "SubsetRef",
    "TotalBoundednessMode",
    "candidate_radii",
    "classify_boundedness",
    "closure",
    "converges",
    "eps_lambda_neighborhood",
    "from_metric",
    "is_cauchy",
    "is_closed",
    "is_dense",
    "is_open",
    "neighborhood",
    "neighborhood_by_levy",
    "open_radius",
    "prob_diameter",
    "random_menger_space",
    "random_metric",
    "random_profile",
    "random_simple_space",
    "separate_points",
    "subset",
    "totally_bounded",
    "validate",
]
