"""Exact chi_y-genus tables and replayable elimination certificates."""

from ._hirz import (
    chi_p,
    execute_step,
    initial_c1_candidates,
    replay,
    run_dimension,
    t_polynomial,
)

__all__ = [
    "chi_p",
    "execute_step",
    "initial_c1_candidates",
    "replay",
    "run_dimension",
    "t_polynomial",
]
