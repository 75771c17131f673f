import numpy as np
import pytest

from maxmatch.daemon.strategies import (
    AdversarialScored,
    Central,
    DaemonStrategy,
    DistributedRandom,
    Replay,
    Synchronous,
    flip_heuristic,
    make_strategy,
    select,
    update_heuristic,
)
from maxmatch.protocol.rules import enabled_nodes
from maxmatch.protocol.state import RuleId, SingleState, clean_configuration
from maxmatch.utils._errors import ContractViolationError


class _Empty(DaemonStrategy):
    name = "empty"

    def select(self, configuration, eligible, rng):
        return frozenset()


class _Outsider(DaemonStrategy):
    name = "outsider"

    def select(self, configuration, eligible, rng):
        return frozenset((1,))


def test_synchronous(clean_chain1):
    """Test that the synchronous daemon activates every eligible node."""
    rng = np.random.default_rng(0)
    assert select(Synchronous(), clean_chain1, rng) == frozenset((2, 3))


def test_central(clean_chain1):
    """Test the central daemons."""
    rng = np.random.default_rng(0)
    assert Central("lowest").select(clean_chain1, {7: None, 3: None}, rng) == {3}
    assert select(Central("lowest"), clean_chain1, rng) == frozenset((2,))
    for _ in range(10):
        active = select(Central("random"), clean_chain1, rng)
        assert len(active) == 1
        assert active <= {2, 3}
    assert Central("random").name == "central-random"
    with pytest.raises(ValueError, match="Invalid value"):
        Central("highest")


def test_distributed(clean_chain1):
    """Test that the distributed daemon draws nonempty eligible subsets."""
    strategy = DistributedRandom(p=0.5)
    rng = np.random.default_rng(12)
    seen = set()
    for _ in range(50):
        active = select(strategy, clean_chain1, rng)
        assert 1 <= len(active)
        assert active <= {2, 3}
        seen.add(active)
    assert len(seen) == 3
    assert strategy.describe() == dict(strategy="distributed", p="0.5")
    with pytest.raises(ValueError, match="strictly positive"):
        DistributedRandom(p=0)
    with pytest.raises(ValueError):
        DistributedRandom(p=1.5)


def test_heuristics(clean_chain1):
    """Test the scores of the adversarial heuristics."""
    assert flip_heuristic(clean_chain1, 2, RuleId.UPDATE) == 2.0
    assert update_heuristic(clean_chain1, 2, RuleId.UPDATE) == 1.0
    assert update_heuristic(clean_chain1, 1, RuleId.UPDATE_P) == 0.0
    # ResetEnd flips end from True to False
    configuration = clean_chain1.replace({1: SingleState(None, True)})
    assert flip_heuristic(configuration, 1, RuleId.RESET_END) == 2.0
    # UpdateP keeps end unchanged
    configuration = clean_chain1.replace({1: SingleState(4, False)})
    assert flip_heuristic(configuration, 1, RuleId.UPDATE_P) == 1.0


def test_adversarial(clean_chain1):
    """Test that the adversarial daemon restricts to the best-scored nodes."""
    configuration = clean_chain1.replace({1: SingleState(4, False)})
    assert set(enabled_nodes(configuration)) == {1, 2, 3}
    strategy = AdversarialScored("update", p=0.5)
    rng = np.random.default_rng(3)
    for _ in range(20):
        assert select(strategy, configuration, rng) <= {2, 3}
    custom = AdversarialScored(lambda configuration, u, rule: -u, p=1.0)
    assert select(custom, configuration, rng) == frozenset((1,))
    assert strategy.describe()["heuristic"] == "update"
    with pytest.raises(ValueError, match="Invalid value"):
        AdversarialScored("longest")
    with pytest.raises(TypeError):
        AdversarialScored(101)


def test_replay(clean_chain1):
    """Test the replay of recorded activation sets."""
    rng = np.random.default_rng(0)
    strategy = Replay([[3], [2]])
    assert select(strategy, clean_chain1, rng) == frozenset((3,))
    assert select(strategy, clean_chain1, rng) == frozenset((2,))
    with pytest.raises(ContractViolationError, match="exhausted"):
        select(strategy, clean_chain1, rng)
    strategy.reset()
    assert select(strategy, clean_chain1, rng) == frozenset((3,))
    with pytest.raises(ContractViolationError, match="not eligible"):
        select(Replay([[1, 2]]), clean_chain1, rng)


def test_select_contract(clean_chain1, k2):
    """Test the validation of the selected activation sets."""
    rng = np.random.default_rng(0)
    with pytest.raises(ContractViolationError, match="nonempty subset"):
        select(_Empty(), clean_chain1, rng)
    with pytest.raises(ContractViolationError, match="nonempty subset"):
        select(_Outsider(), clean_chain1, rng)
    with pytest.raises(ContractViolationError, match="stable configuration"):
        select(Synchronous(), clean_configuration(k2), rng)
    with pytest.raises(TypeError):
        select("sync", clean_chain1, rng)


@pytest.mark.parametrize(
    "name, cls",
    [
        ("sync", Synchronous),
        ("central", Central),
        ("central-random", Central),
        ("distributed", DistributedRandom),
        ("adversarial", AdversarialScored),
    ],
)
def test_make_strategy(name, cls):
    """Test the creation of strategies from their names."""
    strategy = make_strategy(name)
    assert isinstance(strategy, cls)
    assert strategy.name == name
    assert strategy.describe()["strategy"] == name


def test_make_strategy_invalid():
    """Test invalid strategy names."""
    with pytest.raises(ValueError, match="Invalid value"):
        make_strategy("fair")
    with pytest.raises(ValueError, match="Invalid value"):
        make_strategy("adversarial", heuristic="longest")
