import pytest

from .graph import build_graph, generate_augmenting_chain, greedy_maximal_matching
from .protocol.state import clean_configuration
from .utils._logs import logger


def pytest_addoption(parser):
    """Add the --run-slow option."""
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="run the exhaustive model checks marked as slow",
    )


def pytest_configure(config):
    """Configure pytest options."""
    config.addinivalue_line("markers", "slow: exhaustive model checks")
    logger.propagate = True


def pytest_collection_modifyitems(config, items):
    """Skip the slow tests unless --run-slow is given."""
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="use --run-slow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def chain1():
    """P4 1-2-3-4 with the matching {(2, 3)}."""
    _, matching = generate_augmenting_chain(1)
    return matching


@pytest.fixture(scope="session")
def k2():
    """Isolated matched edge."""
    return greedy_maximal_matching(build_graph([(1, 2)]))


@pytest.fixture()
def clean_chain1(chain1):
    """All-null configuration of the chain with one matched edge."""
    return clean_configuration(chain1)
