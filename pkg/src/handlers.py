"""Subcommand handlers. Each returns the output document and an exit code."""
from __future__ import annotations

import argparse
import math
from typing import Any, Callable

import numpy as np
from loguru import logger

from .config import get_settings
from .ddf import (
    TNormKind,
    TriangleFn,
    check_tnorm_axioms,
    check_triangle_axioms,
    dist_to_h0,
    evaluate,
    levy_distance,
    tau_apply,
    tconorm_eval,
    tnorm_eval,
    weak_convergence_report,
)
from .schemas.report import CheckReport
from .space import (
    PMSpace,
    classify_boundedness,
    converges,
    from_metric,
    is_cauchy,
    neighborhood,
    prob_diameter,
    separate_points,
    subset,
    totally_bounded,
    validate,
)
from .storage import load_ddf, load_metric, load_space, read_space, save_space
from .storage.files import ddf_to_file, space_to_file
from .theorems import (
    DEFAULT_EPS_GRID,
    CheckRegistry,
    CheckRunner,
    baire_check,
    cantor_check,
    diameter_report,
    heine_borel_report,
    neighborhood_system_report,
    subsequence_check,
    tb_bounded_report,
)
from .utils.event_emitter import EventEmitter
from .utils.validation import DomainError

Result = tuple[Any, int]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def report_result(report: CheckReport) -> Result:
    """Vacuous passes exit 0 like substantive ones; the document flags them."""
    return report, EXIT_OK if report.passed else EXIT_FAILED


def parse_grid(spec: str) -> list[float]:
    """Expand "start:stop:step" into the inclusive grid start, start+step, ..., <= stop.

    Raises:
        DomainError: On a malformed spec, a non-positive step or stop < start
    """
    try:
        start, stop, step = (float(part) for part in spec.split(":"))
    except ValueError:
        raise DomainError(f"grid must look like start:stop:step, got {spec!r}") from None
    if not step > 0 or stop < start:
        raise DomainError(f"grid {spec!r} needs step > 0 and stop >= start")
    count = int(math.floor((stop - start) / step + 1e-9))
    return np.linspace(start, start + count * step, count + 1).tolist()


def _labels(text: str) -> list[str]:
    return [label.strip() for label in text.split(",") if label.strip()]


def _space(args: argparse.Namespace) -> PMSpace:
    return load_space(args.space, validate_axioms=not args.no_validate)


def _sequence(space: PMSpace, text: str) -> list[int]:
    return [space.index(label) for label in _labels(text)]


def _grid(args: argparse.Namespace) -> list[float]:
    return parse_grid(args.grid) if args.grid else list(DEFAULT_EPS_GRID)


def _tol(args: argparse.Namespace) -> float:
    return args.tol if args.tol is not None else get_settings().levy_tol


def make_runner() -> CheckRunner:
    """Runner whose progress events go to the debug log."""
    emitter = EventEmitter(callback=lambda event: logger.debug(event.model_dump_json()))
    return CheckRunner(registry=build_registry(), emitter=emitter)


def handle_levy(args: argparse.Namespace) -> Result:
    F, G = load_ddf(args.first), load_ddf(args.second)
    return {"d_L": levy_distance(F, G, tol=_tol(args))}, EXIT_OK


def handle_dist_h0(args: argparse.Namespace) -> Result:
    return {"dist_to_h0": dist_to_h0(load_ddf(args.ddf))}, EXIT_OK


def handle_tau(args: argparse.Namespace) -> Result:
    tau = TriangleFn.tau_t(TNormKind(args.tnorm))
    return ddf_to_file(tau_apply(tau, load_ddf(args.first), load_ddf(args.second))), EXIT_OK


def handle_conv(args: argparse.Namespace) -> Result:
    conv = TriangleFn.convolution()
    return ddf_to_file(tau_apply(conv, load_ddf(args.first), load_ddf(args.second))), EXIT_OK


def handle_tnorm(args: argparse.Namespace) -> Result:
    T = TNormKind(args.kind)
    if args.conorm:
        return {"tconorm": T.value, "value": tconorm_eval(T, args.x, args.y)}, EXIT_OK
    return {"tnorm": T.value, "value": tnorm_eval(T, args.x, args.y)}, EXIT_OK


def handle_validate(args: argparse.Namespace) -> Result:
    return report_result(validate(read_space(args.space)))


def handle_from_metric(args: argparse.Namespace) -> Result:
    metric = load_metric(args.metric)
    tau = TriangleFn.convolution() if metric.convolution else None
    space = from_metric(metric.labels, metric.d, metric.tnorm, tau)
    if args.out:
        save_space(args.out, space)
        logger.info(f"Wrote {space.size}-point space to {args.out}")
    return space_to_file(space), EXIT_OK


def handle_neighborhood(args: argparse.Namespace) -> Result:
    space = _space(args)
    members = neighborhood(space, space.index(args.point), args.t)
    return {"point": args.point, "t": args.t, "neighborhood": space.names(members)}, EXIT_OK


def handle_diameter(args: argparse.Namespace) -> Result:
    space = _space(args)
    return ddf_to_file(prob_diameter(space, subset(space, _labels(args.subset)))), EXIT_OK


def handle_classify(args: argparse.Namespace) -> Result:
    space = _space(args)
    return classify_boundedness(space, subset(space, _labels(args.subset))), EXIT_OK


def handle_totally_bounded(args: argparse.Namespace) -> Result:
    space = _space(args)
    return report_result(totally_bounded(space, subset(space, _labels(args.subset)), args.eps, args.mode))


def handle_separate(args: argparse.Namespace) -> Result:
    space = _space(args)
    return report_result(separate_points(space, space.index(args.p), space.index(args.q)))


def handle_cauchy(args: argparse.Namespace) -> Result:
    space = _space(args)
    return report_result(is_cauchy(space, _sequence(space, args.seq), args.eps, args.lam, args.min_tail))


def handle_converges(args: argparse.Namespace) -> Result:
    space = _space(args)
    target = space.index(args.to)
    return report_result(converges(space, _sequence(space, args.seq), target, args.eps, args.lam, args.min_tail))


def handle_weak(args: argparse.Namespace) -> Result:
    target = load_ddf(args.target)
    seq = [load_ddf(path) for path in args.sequence]
    return report_result(weak_convergence_report(seq, target, _tol(args)))


def handle_trace(args: argparse.Namespace) -> Result:
    if not args.grid:
        raise DomainError("trace needs --grid start:stop:step")
    F = load_ddf(args.ddf)
    rows = [[x, evaluate(F, x)] for x in parse_grid(args.grid)]
    return (["x", "F"], rows), EXIT_OK


def check_diameter(args: argparse.Namespace) -> CheckReport:
    return diameter_report(_space(args), args.max_size)


def check_tb(args: argparse.Namespace) -> CheckReport:
    space = _space(args)
    return tb_bounded_report(space, subset(space, _labels(args.subset)), _grid(args))


def check_subsequence(args: argparse.Namespace) -> CheckReport:
    space = _space(args)
    positions = [int(k) - 1 for k in _labels(args.sub)]
    return subsequence_check(space, _sequence(space, args.seq), positions, space.index(args.to), args.eps, args.lam)


def check_cantor(args: argparse.Namespace) -> CheckReport:
    space = _space(args)
    return cantor_check(space, [subset(space, _labels(chain)) for chain in args.set])


def check_baire(args: argparse.Namespace) -> CheckReport:
    space = _space(args)
    return baire_check(space, [subset(space, _labels(member)) for member in args.set])


def check_heine_borel(args: argparse.Namespace) -> CheckReport:
    space = _space(args)
    E = subset(space, _labels(args.subset)) if args.subset else space.everything
    seqs = [_sequence(space, seq) for seq in args.seq or []]
    covers = [
        [subset(space, _labels(member)) for member in cover.split(";")]
        for cover in args.cover or []
    ]
    return heine_borel_report(space, E, seqs, covers, _grid(args), runner=make_runner())


def check_neighborhoods(args: argparse.Namespace) -> CheckReport:
    return neighborhood_system_report(_space(args))


def check_triangle(args: argparse.Namespace) -> CheckReport:
    tau = TriangleFn.convolution() if args.convolution else TriangleFn.tau_t(TNormKind(args.tnorm))
    seed = args.seed if args.seed is not None else get_settings().default_seed
    tol = args.tol if args.tol is not None else get_settings().check_tol
    return check_triangle_axioms(tau, args.samples, tol, seed)


def check_tnorm(args: argparse.Namespace) -> CheckReport:
    seed = args.seed if args.seed is not None else get_settings().default_seed
    tol = args.tol if args.tol is not None else 1e-12
    return check_tnorm_axioms(TNormKind(args.kind), args.samples, tol, seed)


CHECKS: dict[str, tuple[Callable[[argparse.Namespace], CheckReport], str]] = {
    "diameter": (check_diameter, "diameter properties on all small subsets"),
    "tb": (check_tb, "strongly totally bounded implies bounded"),
    "subsequence": (check_subsequence, "Cauchy with convergent subsequence converges"),
    "cantor": (check_cantor, "nested closed sets with vanishing diameter"),
    "baire": (check_baire, "intersection of open dense sets"),
    "heine-borel": (check_heine_borel, "compactness characterisations agree"),
    "neighborhoods": (check_neighborhoods, "strong neighbourhood system is Hausdorff"),
    "triangle-axioms": (check_triangle, "sampled triangle-function axioms"),
    "tnorm-axioms": (check_tnorm, "sampled t-norm axioms"),
}


def build_registry() -> CheckRegistry:
    registry = CheckRegistry()
    for name, (handler, description) in CHECKS.items():
        registry.register(name, handler, description)
    return registry


def handle_check(args: argparse.Namespace) -> Result:
    result = make_runner().execute_registered(args.check, args=args)
    if result.error is not None:
        raise result.error
    return report_result(result.report)


COMMANDS: dict[str, Callable[[argparse.Namespace], Result]] = {
    "levy": handle_levy,
    "dist-h0": handle_dist_h0,
    "tau": handle_tau,
    "conv": handle_conv,
    "tnorm": handle_tnorm,
    "validate": handle_validate,
    "from-metric": handle_from_metric,
    "neighborhood": handle_neighborhood,
    "diameter": handle_diameter,
    "classify": handle_classify,
    "totally-bounded": handle_totally_bounded,
    "separate": handle_separate,
    "cauchy": handle_cauchy,
    "converges": handle_converges,
    "weak": handle_weak,
    "trace": handle_trace,
    "check": handle_check,
}
