"""Distance distribution functions, the modified Lévy metric and triangle functions."""
from .convergence import weak_convergence_report
from .core import (
    DDF,
    H0,
    H_INF,
    cap,
    continuity_points,
    dirac,
    dirac_parameter,
    evaluate,
    first_violation,
    is_dirac,
    leq,
    max_excess,
    pointwise_inf,
    right_limit,
    sup_family,
    sup_norm,
)
from .levy import (
    LevyCondition,
    condition_holds,
    dist_to_h0,
    in_eps_lambda_ball,
    in_h0_ball,
    levy_distance,
)
from .sampling import random_ddf
from .triangle import (
    TNormKind,
    TriangleFn,
    TriangleKind,
    check_tnorm_axioms,
    check_triangle_axioms,
    tau_apply,
    tconorm_eval,
    tnorm_eval,
    tnorm_ordering_report,
)

__all__ = [
    "DDF",
    "H0",
    "H_INF",
    "LevyCondition",
    "TNormKind",
    "TriangleFn",
    "TriangleKind",
    "cap",
    "check_tnorm_axioms",
    "check_triangle_axioms",
    "condition_holds",
    "continuity_points",
    "dirac",
    "dirac_parameter",
    "dist_to_h0",
    "evaluate",
    "first_violation",
    "in_eps_lambda_ball",
    "in_h0_ball",
    "is_dirac",
    "leq",
    "levy_distance",
    "max_excess",
    "pointwise_inf",
    "random_ddf",
    "right_limit",
    "sup_family",
    "sup_norm",
    "tau_apply",
    "tconorm_eval",
    "tnorm_eval",
    "tnorm_ordering_report",
    "weak_convergence_report",
]
