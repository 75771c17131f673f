import logging
from pathlib import Path

import numpy as np
import pytest

from maxmatch.utils._checks import (
    _check_count,
    _check_probability,
    _check_seed,
    _check_type,
    _check_value,
    _check_verbose,
    _ensure_int,
)
from maxmatch.utils._errors import CapExceededError


def test_ensure_int():
    """Test _ensure_int checker."""
    assert _ensure_int(101) == 101
    assert _ensure_int(np.int64(3)) == 3
    with pytest.raises(TypeError, match="'seed' must be an int"):
        _ensure_int(1.5, "seed")
    with pytest.raises(TypeError, match="Item must be an int"):
        _ensure_int(True)


def test_check_type():
    """Test _check_type checker."""
    assert _check_type(101, ("int",)) == 101
    assert _check_type(0.5, ("numeric",)) == 0.5
    assert _check_type("file.txt", ("path-like",)) == "file.txt"
    assert _check_type(Path("file.txt"), ("path-like",)) == Path("file.txt")
    assert _check_type(None, (int, None)) is None
    _check_type(print, ("callable",))
    with pytest.raises(TypeError, match="'n' must be an instance of int"):
        _check_type("4", ("int",), "n")
    with pytest.raises(TypeError, match="str, Path, or None"):
        _check_type(4.0, (str, Path, None))


def test_check_value():
    """Test _check_value checker."""
    assert _check_value("sync", ("sync", "central")) == "sync"
    with pytest.raises(ValueError, match="Allowed values are 'a' and 'b'"):
        _check_value("c", ("a", "b"))
    with pytest.raises(ValueError, match="The only allowed value is 'a'"):
        _check_value("c", ("a",))
    with pytest.raises(ValueError, match="'a', 'b', and 'c'"):
        _check_value("d", ("a", "b", "c"), "letter")
    with pytest.raises(ValueError, match="parameter with a domain"):
        _check_value("d", ("a",), "letter", extra="with a domain")


def test_check_verbose():
    """Test _check_verbose checker."""
    assert _check_verbose(None) == logging.WARNING
    assert _check_verbose(True) == logging.INFO
    assert _check_verbose(False) == logging.WARNING
    assert _check_verbose("debug") == logging.DEBUG
    assert _check_verbose(25) == 25
    with pytest.raises(ValueError, match="negative integer"):
        _check_verbose(-1)
    with pytest.raises(ValueError, match="Invalid value"):
        _check_verbose("verbose")
    with pytest.raises(TypeError):
        _check_verbose(1.5)


def test_check_numbers():
    """Test the count, probability and seed checkers."""
    assert _check_count(3, "k") == 3
    assert _check_count(0, "n_left", 0) == 0
    with pytest.raises(ValueError, match="'k' must be an integer larger"):
        _check_count(0, "k")
    assert _check_probability(1, "p") == 1.0
    with pytest.raises(ValueError, match="probability between 0 and 1"):
        _check_probability(1.2, "p")
    with pytest.raises(TypeError):
        _check_probability("0.5", "p")
    assert _check_seed(None) == 0
    assert _check_seed(42) == 42
    with pytest.raises(ValueError):
        _check_seed(-1)


def test_cap_exceeded_error():
    """Test the attributes of the cap refusal."""
    error = CapExceededError("Too large", estimate=12, cap=10)
    assert str(error) == "Too large (estimate: 12, cap: 10)"
    assert error.estimate == 12
    assert error.cap == 10
