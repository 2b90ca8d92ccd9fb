"""Numerical tolerances and runtime defaults loaded from the environment."""
from __future__ import annotations

from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from ..utils.env import get_env_var, get_float_env_var, get_int_env_var


class Settings(BaseModel):
    """Runtime defaults; explicit function arguments always take precedence."""
    levy_tol: float = Field(default=1e-6, gt=0, description="Absolute bisection tolerance for d_L")
    max_bisection_iter: int = Field(default=60, ge=1, description="Iteration cap for the d_L bisection")
    boundary_eps: float = Field(default=1e-6, gt=0, description="Perturbation applied to candidate radii")
    check_tol: float = Field(default=1e-9, ge=0, description="Tolerance for numerically checked axioms")
    default_seed: int = Field(default=0, description="Seed for randomized checks")
    log_level: str = Field(default="INFO", description="loguru level for the stderr sink")
    max_workers: int = Field(default=4, ge=1, description="Thread pool size for parallel sub-checks")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings once per process.

    Reads `.env` if present, then the PMSPACE_* environment variables.

    Raises:
        RuntimeError: If a numeric variable is malformed
    """
    load_dotenv()
    return Settings(
        levy_tol=get_float_env_var("PMSPACE_LEVY_TOL", 1e-6),
        max_bisection_iter=get_int_env_var("PMSPACE_MAX_BISECTION_ITER", 60),
        boundary_eps=get_float_env_var("PMSPACE_BOUNDARY_EPS", 1e-6),
        check_tol=get_float_env_var("PMSPACE_CHECK_TOL", 1e-9),
        default_seed=get_int_env_var("PMSPACE_SEED", 0),
        log_level=get_env_var("PMSPACE_LOG_LEVEL", "INFO") or "INFO",
        max_workers=get_int_env_var("PMSPACE_MAX_WORKERS", 4),
    )
