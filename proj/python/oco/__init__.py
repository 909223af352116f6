"""Online convex optimization algorithms minimizing dynamic and adaptive regret."""

from ._oco import (  # noqa: F401
    anh_weight,
    bound_c,
    bound_thm3,
    bound_thm4,
    bound_thm5,
    bound_thm7,
    build_grid,
    cover,
    dgc_starting_at,
    gc_starting_at,
    hedge_update,
    normalize_weights,
    potential,
    run_experiment,
)
