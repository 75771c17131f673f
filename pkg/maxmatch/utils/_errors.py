"""Exceptions raised by the package on top of the builtin ones."""


class ContractViolationError(RuntimeError):
    """A caller broke the contract of a protocol or engine operation.

    Raised e.g. when a rule is applied to a node for which it is not enabled,
    or when a stable configuration is handed to a daemon. This is a
    programming error, never a reachable protocol state.
    """


class CapExceededError(RuntimeError):
    """An exhaustive computation was refused because it is too large.

    Parameters
    ----------
    message : str
        Human readable diagnostic.
    estimate : int
        Estimated size of the refused computation.
    cap : int
        The configured cap.
    """

    def __init__(self, message: str, estimate: int, cap: int):
        super().__init__(f"{message} (estimate: {estimate}, cap: {cap})")
        self.estimate = estimate
        self.cap = cap
