#!/usr/bin/env python3
"""Run the randomized theorem checks over seeded random spaces and summarise.

Usage:
    python scripts/run_acceptance.py [--spaces 50] [--seed 0]
"""
import argparse
import sys
from collections import Counter
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
from dotenv import load_dotenv
from loguru import logger

from src.ddf import TNormKind, TriangleFn, check_triangle_axioms
from src.space import random_menger_space, random_simple_space, validate
from src.theorems import DEFAULT_EPS_GRID, diameter_report, neighborhood_system_report, tb_bounded_report

load_dotenv()

# Configure simple logging
logger.remove()
logger.add(sys.stderr, level="INFO")


def run_space_checks(n_spaces: int, seed: int) -> Counter:
    """Validate random spaces and run the per-space checks on each."""
    rng = np.random.default_rng(seed)
    outcomes: Counter = Counter()
    for k in range(n_spaces):
        n = int(rng.integers(2, 7))
        space = random_simple_space(rng, n) if k % 2 else random_menger_space(rng, n)
        reports = [validate(space), diameter_report(space, 4), neighborhood_system_report(space)]
        for size in range(1, min(space.size, 3) + 1):
            for A in combinations(range(space.size), size):
                reports.append(tb_bounded_report(space, A, DEFAULT_EPS_GRID))
        for report in reports:
            outcomes[(report.name, "vacuous" if report.vacuous else "passed" if report.passed else "failed")] += 1
            if not report.passed:
                logger.warning(f"{report.name} failed on space {k}: {report.witnesses}")
    return outcomes


def run_triangle_checks(seed: int) -> Counter:
    outcomes: Counter = Counter()
    taus = [TriangleFn.tau_t(T) for T in (TNormKind.T_M, TNormKind.T_P, TNormKind.T_L)]
    for tau in taus + [TriangleFn.convolution()]:
        report = check_triangle_axioms(tau, n_samples=100, seed=seed)
        outcomes[(report.name, "passed" if report.passed else "failed")] += 1
    return outcomes


def main() -> int:
    parser = argparse.ArgumentParser(description="Randomized acceptance run")
    parser.add_argument("--spaces", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    logger.info(f"Checking {args.spaces} random spaces (seed {args.seed})...")
    outcomes = run_space_checks(args.spaces, args.seed)
    logger.info("Checking triangle function axioms...")
    outcomes.update(run_triangle_checks(args.seed))

    for (name, verdict), count in sorted(outcomes.items()):
        logger.info(f"{name:<28} {verdict:<8} {count}")
    failed = sum(count for (_, verdict), count in outcomes.items() if verdict == "failed")
    if failed:
        logger.error(f"{failed} check(s) failed")
        return 1
    logger.success("All checks passed")
    return 0


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("\nCancelled by user")
        sys.exit(1)
