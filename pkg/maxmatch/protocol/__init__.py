"""The protocol state machine: variables, predicates and guarded rules."""

from .predicates import (  # noqa: F401
    ask,
    ask_first,
    ask_second,
    best_rematch,
    is_first,
    is_second,
    lowest,
    unique_count,
)
from .rules import (  # noqa: F401
    apply_rule,
    enabled_nodes,
    enabled_rule,
    extract_m_plus,
    is_stable,
    step,
)
from .state import (  # noqa: F401
    Configuration,
    MatchedState,
    RuleId,
    SingleState,
    clean_configuration,
    random_configuration,
)
