from dataclasses import dataclass
from typing import Iterator, List, Optional

import pandas as pd


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check.

    Attributes
    ----------
    name : str
        Name of the check.
    status : str
        'pass', 'fail' or 'skipped'.
    witness : str
        Evidence supporting the status: node ids, a path or a counter value.
    """

    name: str
    status: str
    witness: str = ""

    @property
    def passed(self) -> bool:
        """True unless the check failed. Skipped checks do not fail."""
        return self.status != "fail"


class VerificationReport:
    """Ordered collection of named checks.

    Parameters
    ----------
    checks : list of CheckResult | None
        Initial checks.
    """

    def __init__(self, checks: Optional[List[CheckResult]] = None):
        self._checks: List[CheckResult] = list() if checks is None else list(checks)

    def __repr__(self) -> str:
        return (
            f"<VerificationReport | {len(self._checks)} checks, "
            f"{len(self.failures)} failures>"
        )

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self._checks)

    def __len__(self) -> int:
        return len(self._checks)

    def __getitem__(self, name: str) -> CheckResult:
        for check in self._checks:
            if check.name == name:
                return check
        raise KeyError(f"No check named '{name}' in the report.")

    def __contains__(self, name: str) -> bool:
        return any(check.name == name for check in self._checks)

    def add(self, name: str, passed: bool, witness: str = "") -> "VerificationReport":
        """Append a check that passed or failed."""
        self._checks.append(CheckResult(name, "pass" if passed else "fail", witness))
        return self

    def skip(self, name: str, reason: str) -> "VerificationReport":
        """Append a check that could not be evaluated."""
        self._checks.append(CheckResult(name, "skipped", reason))
        return self

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        """Append the checks of another report."""
        self._checks.extend(other)
        return self

    @property
    def passed(self) -> bool:
        """True if no check failed."""
        return all(check.passed for check in self._checks)

    @property
    def failures(self) -> List[CheckResult]:
        """The failed checks."""
        return [check for check in self._checks if not check.passed]

    def to_frame(self) -> pd.DataFrame:
        """Table with the columns check, status and witness."""
        return pd.DataFrame(
            [(check.name, check.status, check.witness) for check in self._checks],
            columns=["check", "status", "witness"],
        )
