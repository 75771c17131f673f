"""Daemons, executions and move accounting."""

from .bounds import MoveBounds, check_move_bounds, theoretical_bounds  # noqa: F401
from .engine import (  # noqa: F401
    MoveStats,
    Outcome,
    Trace,
    TraceStep,
    run,
    verify_trace,
)
from .strategies import (  # noqa: F401
    AdversarialScored,
    Central,
    DaemonStrategy,
    DistributedRandom,
    Replay,
    Synchronous,
    make_strategy,
    select,
)
