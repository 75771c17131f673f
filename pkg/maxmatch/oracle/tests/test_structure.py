import pytest

from maxmatch.daemon.engine import Outcome, Trace, TraceStep, run
from maxmatch.daemon.strategies import Synchronous
from maxmatch.graph import Matching, build_graph, generate
from maxmatch.oracle.report import CheckResult, VerificationReport
from maxmatch.oracle.structure import (
    cand,
    check_stop_persistence,
    is_stop_configuration,
    verify_approximation,
    verify_stable_structure,
)
from maxmatch.protocol.rules import enabled_rule
from maxmatch.protocol.state import (
    Configuration,
    MatchedState,
    RuleId,
    SingleState,
    clean_configuration,
)
from maxmatch.utils._errors import ContractViolationError


@pytest.fixture()
def rematched(chain1):
    """Stable configuration of the chain 1-2-3-4 rematched as (1, 2), (3, 4)."""
    return Configuration(
        chain1,
        {
            1: SingleState(2, True),
            2: MatchedState(1, 1, None, True, True),
            3: MatchedState(4, 4, None, True, True),
            4: SingleState(3, True),
        },
    )


def test_report():
    """Test the collection of named checks."""
    report = VerificationReport()
    assert report.passed
    assert len(report) == 0
    report.add("a", True).skip("b", "too large").add("c", False, "node 3")
    assert len(report) == 3
    assert not report.passed
    assert report.failures == [CheckResult("c", "fail", "node 3")]
    assert report["b"].status == "skipped"
    assert report["b"].passed
    assert "c" in report
    assert "d" not in report
    with pytest.raises(KeyError, match="No check named"):
        report["d"]
    frame = report.to_frame()
    assert list(frame.columns) == ["check", "status", "witness"]
    assert list(frame["status"]) == ["pass", "skipped", "fail"]
    other = VerificationReport([CheckResult("e", "pass")])
    assert len(report.extend(other)) == 4
    assert "1 failures" in repr(report)


def test_stable_structure_rematched(rematched):
    """Test the structure of a rematched stable configuration."""
    report = verify_stable_structure(rematched)
    assert report.passed
    assert report["matched_edge_shape"].witness == "0 unchanged, 1 rematched"
    assert report["m_plus_not_smaller"].witness == "|M+| = 2, |M| = 1"


def test_stable_structure_clean_edge(k2):
    """Test the structure of an isolated matched edge."""
    report = verify_stable_structure(clean_configuration(k2))
    assert report.passed
    assert report["matched_edge_shape"].witness == "1 unchanged, 0 rematched"


def test_stable_structure_requires_stable(clean_chain1):
    """Test that unstable configurations are refused."""
    with pytest.raises(ContractViolationError, match="not stable"):
        verify_stable_structure(clean_chain1)
    with pytest.raises(ContractViolationError, match="not stable"):
        verify_approximation(clean_chain1)
    with pytest.raises(TypeError):
        verify_stable_structure(clean_chain1.states)


def test_approximation(rematched, k2):
    """Test the approximation checks."""
    report = verify_approximation(rematched)
    assert report.passed
    assert report["two_thirds_ratio"].witness == "|M+| = 2, maximum = 2"
    report = verify_approximation(clean_configuration(k2))
    assert report.passed
    assert report["no_3_augmenting_path"].passed
    # above the exact-solver cap the ratio is skipped
    report = verify_approximation(rematched, exact_cap=3, verbose="ERROR")
    assert report.passed
    assert report["two_thirds_ratio"].status == "skipped"
    with pytest.raises(ValueError, match="differs"):
        verify_approximation(rematched, generate("path", 5))


def test_cand(rematched, clean_chain1):
    """Test the candidates of a matched node."""
    assert cand(rematched, 2) == frozenset((1,))
    assert cand(clean_chain1, 3) == frozenset((4,))
    # a single node pointing elsewhere with end True is not a candidate
    configuration = clean_chain1.replace({4: SingleState(None, True)})
    assert cand(configuration, 3) == frozenset()
    with pytest.raises(ValueError, match="single"):
        cand(rematched, 1)


def test_is_stop_configuration(rematched, clean_chain1):
    """Test the detection of stop configurations."""
    assert is_stop_configuration(rematched, 2)
    assert is_stop_configuration(rematched, 3)
    assert not is_stop_configuration(clean_chain1, 2)
    # s must be True on both endpoints
    configuration = rematched.replace({3: MatchedState(4, 4, None, False, True)})
    assert not is_stop_configuration(configuration, 2)
    with pytest.raises(ValueError, match="single"):
        is_stop_configuration(rematched, 4)


def test_stop_persistence(clean_chain1, rematched):
    """Test the persistence of stop configurations along a trace."""
    trace, _ = run(clean_chain1, Synchronous())
    report = check_stop_persistence(trace)
    assert report.passed
    assert report["stop_persistence"].witness == "1 pairs reached a stop configuration"
    # a forged move of a stopped pair is reported
    moved = rematched.replace({1: SingleState(None, True)})
    forged = Trace(
        rematched,
        [TraceStep(0, {1: RuleId.UPDATE_P, 2: RuleId.RESET_MATCH}, moved, 2)],
        Outcome.STABILIZED,
        dict(),
    )
    report = check_stop_persistence(forged)
    assert not report.passed
    assert "[2] moved at step 0" in report["stop_persistence"].witness


def test_stop_persistence_corrupted_candidates():
    """Test that stop conditions met with arbitrary α/β values are not tracked."""
    graph = build_graph([(1, 2), (1, 3), (1, 10), (2, 20)])
    matching = Matching(graph, [(1, 2)])
    initial = Configuration(
        matching,
        {
            1: MatchedState(10, 10, 3, True, True),  # α > β
            2: MatchedState(20, 20, None, True, True),
            3: SingleState(None, False),
            10: SingleState(1, True),
            20: SingleState(2, True),
        },
    )
    assert is_stop_configuration(initial, 1)
    assert enabled_rule(initial, 1) is RuleId.UPDATE
    trace, _ = run(initial, Synchronous())
    assert trace.outcome is Outcome.STABILIZED
    assert 1 in trace.steps[0].activations
    assert check_stop_persistence(trace).passed
    assert verify_stable_structure(trace.final).passed
