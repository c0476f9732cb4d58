"""Global size caps and resource budgets.

All constructors that can blow up combinatorially consult these values so
that a bad input aborts with a clear error instead of hanging.
"""

import os

DEFAULT_MAX_DIM = 6
MAX_SIMPLICES = 50_000
MAX_HORNS = 2_000_000

ENV_MAX_DIM = "KANFORGE_MAX_DIM"


class BudgetError(RuntimeError):
    """A size or enumeration budget was exceeded."""


def max_dim():
    """Current global dimension cap (env override wins)."""
    raw = os.environ.get(ENV_MAX_DIM)
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_DIM} must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError(f"{ENV_MAX_DIM} must be nonnegative, got {value}")
    return value


def check_dim(dim, what="construction"):
    cap = max_dim()
    if dim > cap:
        raise BudgetError(
            f"{what} reaches dimension {dim}, above the global cap {cap} "
            f"(override with {ENV_MAX_DIM})"
        )
    return dim


def check_simplex_count(count, what="presentation"):
    if count > MAX_SIMPLICES:
        raise BudgetError(
            f"{what} has {count} nondegenerate simplices, above the budget {MAX_SIMPLICES}"
        )
    return count
