"""Configuration module."""

from .config import load_experiment_config, load_modelcheck_config  # noqa: F401
