"""Exhaustive exploration of small instances under every daemon choice."""

from .domains import (  # noqa: F401
    StateEncoder,
    enumerate_initial_configurations,
    estimate_state_space,
)
from .explore import StateSpace, explore  # noqa: F401
from .verify import analyze, model_check, verify_silence_and_closure  # noqa: F401
