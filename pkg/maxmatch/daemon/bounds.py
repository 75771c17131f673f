"""Closed-form move bounds and their check against recorded counters."""

from dataclasses import asdict, dataclass
from typing import Dict

from ..graph import Graph, Matching
from ..oracle.report import VerificationReport
from ..protocol.state import RuleId
from ..utils._checks import _check_type
from ..utils._docs import fill_doc

# per-node limits
END_TRUE_WRITES_PER_MATCHED: int = 2
COPIES_TRUE_PER_MATCHED: int = 3
RESET_END_PER_SINGLE: int = 1


@dataclass(frozen=True)
class MoveBounds:
    """Move bounds of an instance, from μ, σ and Δ.

    Attributes
    ----------
    mu : int
        Number of matched nodes.
    sigma : int
        Number of single nodes.
    delta : int
        Maximum degree.
    """

    mu: int
    sigma: int
    delta: int

    @property
    def single_end_flips(self) -> int:
        """Total changes of the end variables of single nodes."""
        return self.sigma + 6 * self.mu

    @property
    def single_true_writes(self) -> int:
        """Total writes of True in the end variables of single nodes."""
        return 3 * self.mu

    @property
    def update(self) -> int:
        """Total Update moves."""
        return self.delta * self.single_end_flips + self.mu

    @property
    def matched(self) -> int:
        """Total moves of matched nodes."""
        return 12 * self.mu * self.update

    @property
    def reset_end(self) -> int:
        """Total ResetEnd moves."""
        return self.sigma

    @property
    def update_end(self) -> int:
        """Total UpdateEnd moves."""
        return self.single_end_flips

    @property
    def update_p(self) -> int:
        """Total UpdateP moves, at most matched + 1 per single node."""
        return self.sigma * (self.matched + 1)

    @property
    def total(self) -> int:
        """Total moves of all nodes."""
        return self.matched + self.reset_end + self.update_end + self.update_p

    def as_dict(self) -> Dict[str, int]:
        """μ, σ, Δ and every bound, keyed by name."""
        bounds = asdict(self)
        for key in (
            "single_end_flips",
            "single_true_writes",
            "update",
            "matched",
            "reset_end",
            "update_end",
            "update_p",
            "total",
        ):
            bounds[f"bound_{key}"] = getattr(self, key)
        return bounds


@fill_doc
def theoretical_bounds(graph: Graph, matching: Matching) -> MoveBounds:
    """Compute the move bounds of an instance.

    Parameters
    ----------
    %(graph)s
    %(matching)s

    Returns
    -------
    %(bounds)s
    """
    _check_type(graph, (Graph,), "graph")
    _check_type(matching, (Matching,), "matching")
    if matching.graph != graph:
        raise ValueError("The matching is not defined on the provided graph.")
    roles = matching.roles
    return MoveBounds(mu=roles.mu, sigma=roles.sigma, delta=graph.max_degree)


def _over(counts: Dict[int, int], limit: int) -> str:
    return ", ".join(f"node {u}: {n}" for u, n in sorted(counts.items()) if n > limit)


@fill_doc
def check_move_bounds(stats, bounds: MoveBounds) -> VerificationReport:
    """Check the counters of an execution against the move bounds.

    Parameters
    ----------
    %(stats)s
    %(bounds)s

    Returns
    -------
    %(report_return)s
    """
    _check_type(bounds, (MoveBounds,), "bounds")
    report = VerificationReport()
    totals = stats.rule_totals()

    report.add(
        "end_true_writes_per_matched",
        all(n <= END_TRUE_WRITES_PER_MATCHED for n in stats.end_true_writes.values()),
        _over(stats.end_true_writes, END_TRUE_WRITES_PER_MATCHED)
        or f"max {max(stats.end_true_writes.values(), default=0)}",
    )
    reset_end = stats.per_node(RuleId.RESET_END)
    report.add(
        "reset_end_per_single",
        all(n <= RESET_END_PER_SINGLE for n in reset_end.values()),
        _over(reset_end, RESET_END_PER_SINGLE)
        or f"max {max(reset_end.values(), default=0)}",
    )
    report.add(
        "copies_true_per_matched",
        all(n <= COPIES_TRUE_PER_MATCHED for n in stats.copies_true.values()),
        _over(stats.copies_true, COPIES_TRUE_PER_MATCHED)
        or f"max {max(stats.copies_true.values(), default=0)}",
    )

    def total_check(name: str, observed: int, bound: int) -> None:
        sign = "<=" if observed <= bound else ">"
        report.add(name, observed <= bound, f"{observed} {sign} {bound}")

    total_check(
        "single_true_writes", stats.single_true_writes, bounds.single_true_writes
    )
    total_check(
        "single_end_flips", sum(stats.end_flips.values()), bounds.single_end_flips
    )
    total_check("update_moves", totals[RuleId.UPDATE], bounds.update)
    total_check("matched_moves", stats.matched_moves, bounds.matched)
    total_check("reset_end_moves", totals[RuleId.RESET_END], bounds.reset_end)
    total_check("update_end_moves", totals[RuleId.UPDATE_END], bounds.update_end)
    update_p = stats.per_node(RuleId.UPDATE_P)
    observed = totals[RuleId.UPDATE_P]
    report.add(
        "update_p_moves",
        observed <= bounds.update_p,
        f"{observed} (max {max(update_p.values(), default=0)} per node), "
        f"bound {bounds.update_p}",
    )
    total_check("total_moves", stats.total_moves, bounds.total)
    return report
