from configparser import ConfigParser
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..utils._checks import _check_type, _check_value, _ensure_int
from .constants import EXACT_CAP, POINTER_DOMAINS, TRANSITION_CAP

_EXPERIMENT_KEYS = (
    "graph",
    "matching",
    "init",
    "strategy",
    "heuristic",
    "seed",
    "move_limit",
    "repetitions",
)


def _read_config(fname: Union[str, Path]) -> ConfigParser:
    """Read an INI file, either a packaged default or an existing path."""
    _check_type(fname, ("path-like",), "fname")
    fname = Path(fname)
    if not fname.exists():
        fname = Path(__file__).parent / fname
    if not fname.exists():
        raise FileNotFoundError(f"Configuration file '{fname}' does not exist.")
    config = ConfigParser(inline_comment_prefixes=("#", ";"))
    config.optionxform = str
    config.read(str(fname), encoding="utf-8")
    return config


def _optional_int(value: str, key: str) -> Optional[int]:
    """Convert an INI value to an int, 'none' being None."""
    if value.strip().lower() == "none":
        return None
    try:
        return _ensure_int(int(value), key)
    except ValueError:
        raise ValueError(f"Key '{key}' must be an integer or 'none', got '{value}'.")


def load_experiment_config(
    fname: Union[str, Path] = "experiment.ini",
) -> Dict[str, Union[str, int, None]]:
    """Load the [experiment] section of an experiment configuration.

    Parameters
    ----------
    fname : str | Path
        Path to an INI file, or name of a file packaged in the config module.

    Returns
    -------
    config : dict
        The experiment keys, with 'seed', 'move_limit' and 'repetitions'
        converted to int (or None for a 'none' move limit).
    """
    config = _read_config(fname)
    if not config.has_section("experiment"):
        raise ValueError("Section 'experiment' is missing from configuration.")
    section = dict(config["experiment"])
    unknown = sorted(set(section) - set(_EXPERIMENT_KEYS))
    if len(unknown) != 0:
        raise ValueError(f"Unknown keys {unknown} in section 'experiment'.")
    for key in ("seed", "repetitions"):
        if key in section:
            section[key] = _ensure_int(int(section[key]), key)
    if "move_limit" in section:
        section["move_limit"] = _optional_int(section["move_limit"], "move_limit")
    return section


def load_modelcheck_config(
    fname: Union[str, Path] = "modelcheck.ini",
) -> Tuple[Dict[str, int], List[Tuple[str, str, str]]]:
    """Load the caps and the instance suite of the model checker.

    Parameters
    ----------
    fname : str | Path
        Path to an INI file, or name of a file packaged in the config module.

    Returns
    -------
    caps : dict
        'transition_cap' and 'exact_cap'.
    suite : list of tuple
        (name, graph source, pointer domain) for each instance, in file order.
    """
    config = _read_config(fname)
    caps = dict(transition_cap=TRANSITION_CAP, exact_cap=EXACT_CAP)
    if config.has_section("modelcheck"):
        for key, value in config["modelcheck"].items():
            _check_value(key, caps, "modelcheck key")
            caps[key] = _ensure_int(int(value), key)
    suite = list()
    if config.has_section("suite"):
        for name, value in config["suite"].items():
            fields = value.split()
            if len(fields) != 2:
                raise ValueError(
                    f"Instance '{name}' must be given as 'graph-source "
                    f"pointer-domain', got '{value}'."
                )
            _check_value(fields[1], POINTER_DOMAINS, "pointer_domain")
            suite.append((name, fields[0], fields[1]))
    return caps, suite
