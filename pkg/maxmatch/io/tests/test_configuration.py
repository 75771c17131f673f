import pytest

from maxmatch.graph import generate_augmenting_chain
from maxmatch.io.configuration import dump_configuration, parse_configuration
from maxmatch.protocol.state import (
    Configuration,
    MatchedState,
    SingleState,
    random_configuration,
)


def test_dump_clean(clean_chain1):
    """Test the dump of the clean configuration."""
    assert dump_configuration(clean_chain1).splitlines() == [
        "1 single - - - - - 0",
        "2 matched 3 - - - 0 0",
        "3 matched 2 - - - 0 0",
        "4 single - - - - - 0",
    ]


def test_dump_parse(chain1):
    """Test the dump of a rematched configuration and its parsing."""
    configuration = Configuration(
        chain1,
        {
            1: SingleState(2, True),
            2: MatchedState(1, 1, None, True, True),
            3: MatchedState(4, 4, None, True, False),
            4: SingleState(3, False),
        },
    )
    text = dump_configuration(configuration)
    assert text.endswith("\n")
    assert text.splitlines() == [
        "1 single - 2 - - - 1",
        "2 matched 3 1 1 - 1 1",
        "3 matched 2 4 4 - 1 0",
        "4 single - 3 - - - 0",
    ]
    assert parse_configuration(text, chain1) == configuration
    # comments, blank lines and any line order are accepted
    lines = text.splitlines()
    shuffled = "# dump\n\n" + "\n".join(reversed(lines))
    assert parse_configuration(shuffled, chain1) == configuration


def test_parse_corrupted_pointers():
    """Test that pointers outside the neighborhood are preserved."""
    _, matching = generate_augmenting_chain(2)
    configuration = random_configuration(matching, 5, foreign_rate=1.0)
    text = dump_configuration(configuration)
    assert parse_configuration(text, matching) == configuration


@pytest.mark.parametrize(
    "line, match",
    [
        ("1 single - - - - 0", "expected 8 fields"),
        ("9 single - - - - - 0", "unknown node"),
        ("x single - - - - - 0", "invalid pointer"),
        ("1 matched - - - - - 0", "is single in the matching"),
        ("2 matched 4 - - - 0 0", "has partner 3"),
        ("1 single - - 2 - - 0", "has no alpha, beta or s"),
        ("1 single - - - - - 2", "invalid boolean"),
        ("2 matched 3 y - - 0 0", "invalid pointer 'y'"),
    ],
)
def test_parse_invalid(chain1, clean_chain1, line, match):
    """Test the errors raised on malformed dumps."""
    lines = dump_configuration(clean_chain1).splitlines()
    node = int(line.split()[0]) if line.split()[0].isdigit() else 1
    text = "\n".join(
        [line] + [elt for elt in lines if not elt.startswith(f"{node} ")]
    )
    with pytest.raises(ValueError, match=match):
        parse_configuration(text, chain1)


def test_parse_duplicate_and_missing(chain1, clean_chain1):
    """Test dumps listing a node twice or missing a node."""
    lines = dump_configuration(clean_chain1).splitlines()
    with pytest.raises(ValueError, match="listed twice"):
        parse_configuration("\n".join(lines + lines[:1]), chain1)
    with pytest.raises(ValueError):
        parse_configuration("\n".join(lines[1:]), chain1)
    with pytest.raises(TypeError):
        parse_configuration(lines, chain1)
