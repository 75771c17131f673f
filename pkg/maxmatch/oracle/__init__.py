"""Independent checkers of matchings and stable configurations."""

from .matching import (  # noqa: F401
    AugmentingPath3,
    find_3_augmenting_paths,
    is_matching,
    max_matching_exact,
)
from .report import CheckResult, VerificationReport  # noqa: F401
from .structure import (  # noqa: F401
    cand,
    check_stop_persistence,
    is_stop_configuration,
    verify_approximation,
    verify_stable_structure,
)
