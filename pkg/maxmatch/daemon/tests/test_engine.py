import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxmatch.daemon.bounds import check_move_bounds, theoretical_bounds
from maxmatch.daemon.engine import Outcome, Trace, run, verify_trace
from maxmatch.daemon.strategies import Replay, Synchronous, make_strategy
from maxmatch.graph import generate_augmenting_chain
from maxmatch.oracle.structure import (
    check_stop_persistence,
    verify_approximation,
    verify_stable_structure,
)
from maxmatch.protocol.rules import extract_m_plus, is_stable
from maxmatch.protocol.state import (
    MatchedState,
    RuleId,
    SingleState,
    clean_configuration,
    random_configuration,
)
from maxmatch.utils._errors import ContractViolationError


def test_run_stable_edge(k2):
    """Test that an isolated matched edge is stable from the clean state."""
    trace, stats = run(clean_configuration(k2), Synchronous())
    assert trace.outcome is Outcome.STABILIZED
    assert len(trace) == 0
    assert trace.moves == 0
    assert stats.total_moves == 0
    assert trace.final == trace.initial


def test_run_chain_synchronous(clean_chain1):
    """Test the synchronous execution of the path 1-2-3-4 from the clean state."""
    trace, stats = run(clean_chain1, Synchronous())
    assert trace.outcome is Outcome.STABILIZED
    assert len(trace) == 9
    assert trace.moves == 11
    assert trace.steps[0].activations == {2: RuleId.UPDATE, 3: RuleId.UPDATE}
    assert trace.steps[1].activations == {2: RuleId.MATCH_FIRST}
    assert trace.steps[-1].activations == {1: RuleId.UPDATE_END}
    assert [elt.index for elt in trace.steps] == list(range(9))
    assert trace.final[1] == SingleState(2, True)
    assert trace.final[2] == MatchedState(1, 1, None, True, True)
    assert trace.final[3] == MatchedState(4, 4, None, True, True)
    assert trace.final[4] == SingleState(3, True)
    assert extract_m_plus(trace.final) == frozenset(((1, 2), (3, 4)))

    totals = stats.rule_totals()
    assert totals[RuleId.UPDATE] == 2
    assert totals[RuleId.MATCH_FIRST] == 3
    assert totals[RuleId.MATCH_SECOND] == 2
    assert totals[RuleId.UPDATE_P] == 2
    assert totals[RuleId.UPDATE_END] == 2
    assert totals[RuleId.RESET_END] == 0
    assert totals[RuleId.RESET_MATCH] == 0
    assert stats.matched_moves == 7
    assert stats.end_true_writes == {2: 1, 3: 1}
    assert stats.copies_true == {2: 1, 3: 1}
    assert stats.single_true_writes == 2

    frame = stats.to_frame()
    assert list(frame["node"]) == [1, 2, 3, 4]
    assert list(frame["role"]) == ["single", "matched", "matched", "single"]
    assert frame["moves"].sum() == 11

    assert verify_trace(trace).passed
    assert check_stop_persistence(trace).passed
    bounds = theoretical_bounds(clean_chain1.graph, clean_chain1.matching)
    assert check_move_bounds(stats, bounds).passed


def test_run_move_limit(clean_chain1):
    """Test that exceeding the move limit ends the execution."""
    trace, stats = run(clean_chain1, Synchronous(), move_limit=1)
    assert trace.outcome is Outcome.LIMIT_EXCEEDED
    assert len(trace) == 1
    assert trace.moves == 2
    assert not is_stable(trace.final)
    assert trace.header["move_limit"] == 1
    assert verify_trace(trace).passed
    # the limit takes precedence over stabilization
    trace, _ = run(clean_chain1, Synchronous(), move_limit=10)
    assert trace.outcome is Outcome.LIMIT_EXCEEDED
    assert is_stable(trace.final)
    with pytest.raises(ValueError, match="move_limit"):
        run(clean_chain1, Synchronous(), move_limit=0)


def test_run_header(clean_chain1):
    """Test the provenance recorded in the trace header."""
    trace, _ = run(clean_chain1, make_strategy("distributed"), seed=4)
    assert trace.header["strategy"] == "distributed"
    assert trace.header["seed"] == 4
    assert trace.header["move_limit"] == 2179
    assert len(trace.header["graph_hash"]) == 64
    assert "<Trace" in repr(trace)


@pytest.mark.parametrize("name", ("central-random", "distributed", "adversarial"))
def test_run_deterministic(name):
    """Test that an execution is a function of its seed."""
    _, matching = generate_augmenting_chain(2)
    initial = random_configuration(matching, 7)
    first, _ = run(initial, make_strategy(name), seed=11)
    second, _ = run(initial, make_strategy(name), seed=11)
    assert [elt.activations for elt in first.steps] == [
        elt.activations for elt in second.steps
    ]
    assert first.final == second.final


def test_run_replay():
    """Test that replaying the activation sets reproduces an execution."""
    _, matching = generate_augmenting_chain(2, "descending")
    initial = random_configuration(matching, 3)
    trace, _ = run(initial, make_strategy("distributed"), seed=5)
    activations = [sorted(elt.activations) for elt in trace.steps]
    replayed, _ = run(initial, Replay(activations))
    assert replayed.configurations == trace.configurations
    assert replayed.header["strategy"] == "replay"
    # a truncated list breaks the contract of the replay daemon
    if len(activations) > 1:
        with pytest.raises(ContractViolationError, match="exhausted"):
            run(initial, Replay(activations[:-1]))


def test_verify_trace_tampered(clean_chain1):
    """Test that a forged trace is rejected."""
    trace, _ = run(clean_chain1, Synchronous())
    steps = list(trace.steps)
    steps[0], steps[1] = steps[1], steps[0]
    forged = Trace(trace.initial, steps, trace.outcome, trace.header)
    report = verify_trace(forged)
    assert not report.passed
    assert not report["trace_successors"].passed
    assert not report["trace_move_count"].passed
    truncated = Trace(trace.initial, steps[:3], Outcome.STABILIZED, trace.header)
    assert not verify_trace(truncated)["trace_outcome"].passed


def test_run_invalid(clean_chain1):
    """Test the arguments of run."""
    with pytest.raises(TypeError):
        run(clean_chain1.states, Synchronous())
    with pytest.raises(TypeError):
        run(clean_chain1, "sync")


@given(
    k=st.integers(1, 3),
    order=st.sampled_from(("ascending", "descending")),
    strategy=st.sampled_from(
        ("sync", "central", "central-random", "distributed", "adversarial")
    ),
    seed=st.integers(0, 2**16),
)
@settings(max_examples=60, deadline=None)
def test_run_converges(k, order, strategy, seed):
    """Test convergence, bounds and the final matching from arbitrary states."""
    graph, matching = generate_augmenting_chain(k, order)
    initial = random_configuration(matching, seed)
    trace, stats = run(initial, make_strategy(strategy), seed=seed, verbose="WARNING")
    assert trace.outcome is Outcome.STABILIZED
    assert is_stable(trace.final)
    assert verify_trace(trace).passed
    assert check_stop_persistence(trace).passed
    assert check_move_bounds(stats, theoretical_bounds(graph, matching)).passed
    assert verify_stable_structure(trace.final).passed
    assert verify_approximation(trace.final, verbose="WARNING").passed
