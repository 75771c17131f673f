from ._version import __version__  # noqa: F401
from .daemon import make_strategy, run  # noqa: F401
from .graph import (  # noqa: F401
    Graph,
    Matching,
    build_graph,
    from_networkx,
    generate,
    generate_augmenting_chain,
    greedy_maximal_matching,
)
from .protocol import (  # noqa: F401
    Configuration,
    clean_configuration,
    random_configuration,
)
from .utils import sys_info  # noqa: F401
from .utils._logs import logger, set_log_level  # noqa: F401
