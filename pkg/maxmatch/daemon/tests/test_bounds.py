import pytest

from maxmatch.daemon.bounds import MoveBounds, check_move_bounds, theoretical_bounds
from maxmatch.daemon.engine import MoveStats
from maxmatch.graph import Matching, build_graph, generate_augmenting_chain
from maxmatch.protocol.state import RuleId


def test_bounds_chain(chain1):
    """Test the bounds of the path 1-2-3-4 matched on (2, 3)."""
    bounds = theoretical_bounds(chain1.graph, chain1)
    assert (bounds.mu, bounds.sigma, bounds.delta) == (2, 2, 2)
    assert bounds.single_end_flips == 14
    assert bounds.single_true_writes == 6
    assert bounds.update == 30
    assert bounds.matched == 720
    assert bounds.reset_end == 2
    assert bounds.update_end == 14
    assert bounds.update_p == 1442
    assert bounds.total == 2178


def test_bounds_edge(k2):
    """Test the bounds of an isolated matched edge."""
    bounds = theoretical_bounds(k2.graph, k2)
    assert bounds.matched == 336
    assert bounds.total == 348


def test_bounds_without_matched_nodes():
    """Test that every matched term vanishes when μ = 0."""
    graph = build_graph([], nodes=[1, 2])
    bounds = theoretical_bounds(graph, Matching(graph, []))
    assert bounds.mu == 0
    assert bounds.update == 0
    assert bounds.matched == 0
    assert bounds.single_true_writes == 0
    assert bounds.total == 2 + 2 + 2


def test_bounds_as_dict():
    """Test the flat representation of the bounds."""
    bounds = MoveBounds(mu=2, sigma=2, delta=2).as_dict()
    assert bounds["mu"] == 2
    assert bounds["bound_total"] == 2178
    assert bounds["bound_update_p"] == 1442


def test_bounds_invalid(chain1):
    """Test mismatched instances."""
    other, _ = generate_augmenting_chain(2)
    with pytest.raises(ValueError, match="not defined on the provided graph"):
        theoretical_bounds(other, chain1)
    with pytest.raises(TypeError):
        theoretical_bounds(chain1.graph, chain1.edges)


def test_check_move_bounds(chain1):
    """Test the per-node and total checks against synthetic counters."""
    bounds = theoretical_bounds(chain1.graph, chain1)
    stats = MoveStats(chain1)
    report = check_move_bounds(stats, bounds)
    assert report.passed
    assert "total_moves" in report

    stats.end_true_writes[2] = 3
    report = check_move_bounds(stats, bounds)
    assert not report.passed
    assert [check.name for check in report.failures] == [
        "end_true_writes_per_matched"
    ]
    assert "node 2: 3" in report["end_true_writes_per_matched"].witness

    stats = MoveStats(chain1)
    stats.counts[(1, RuleId.RESET_END)] = 2
    stats.counts[(4, RuleId.RESET_END)] = 1
    report = check_move_bounds(stats, bounds)
    names = {check.name for check in report.failures}
    assert names == {"reset_end_per_single", "reset_end_moves"}
    assert report["reset_end_moves"].witness == "3 > 2"
