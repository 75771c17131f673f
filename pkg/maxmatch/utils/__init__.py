"""Utilities module."""

from ._errors import CapExceededError, ContractViolationError  # noqa: F401
from .config import sys_info  # noqa: F401
