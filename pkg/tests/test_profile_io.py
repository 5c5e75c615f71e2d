import pytest
from hypothesis import given, strategies as st

from senvr import (
    ParseError,
    Profile,
    WeakOrder,
    default_alternative_names,
    parse_profile,
    serialize_profile,
)


def wo(*classes):
    return WeakOrder(tuple(frozenset(c) for c in classes))


@st.composite
def profiles(draw, m_max=5, n_max=6):
    m = draw(st.integers(2, m_max))
    n = draw(st.integers(1, n_max))
    voters = []
    for _ in range(n):
        labels = draw(st.lists(st.integers(0, m - 1), min_size=m, max_size=m))
        distinct = sorted(set(labels))
        voters.append(
            wo(*({i for i, l in enumerate(labels) if l == d} for d in distinct))
        )
    return Profile(default_alternative_names(m), tuple(voters))


EXAMPLE1_TEXT = """\
alternatives: x y z
voter: x > y > z
voter: x ~ y > z
voter: x ~ y ~ z
"""

EXAMPLE2_TEXT = """\
alternatives: w x y z
voter: w = x > y > z
voter: x ~ w > z > y
voter: z ~ x > y > w
voter: z > y ~ x > w
voter: z > y > x > w
"""


def test_parse_three_voters(example1):
    assert parse_profile(EXAMPLE1_TEXT) == example1


def test_parse_five_voters_mixed_tie_separators(example2):
    assert parse_profile(EXAMPLE2_TEXT) == example2


def test_parse_is_whitespace_tolerant(example1):
    text = (
        "\n  # a preference profile\n"
        "alternatives:   x  y\tz   # three options\n"
        "\n"
        "voter: x>y>z\n"
        "voter:x ~y > z\n"
        "voter: x~y~z  # everyone tied\n"
    )
    assert parse_profile(text) == example1


def test_parse_accepts_crlf(example1):
    assert parse_profile(EXAMPLE1_TEXT.replace("\n", "\r\n")) == example1


def test_parse_keeps_declaration_order():
    profile = parse_profile("alternatives: z9 a_1 B\nvoter: B > z9 ~ a_1\n")
    assert profile.alternative_names == ("z9", "a_1", "B")
    assert profile.voters[0] == wo({2}, {0, 1})


@pytest.mark.parametrize(
    "text, lineno, reason",
    [
        ("alternatives: x y\nvoter: x > q\n", 2, "unknown"),
        ("alternatives: x y\nvoter: x > x\n", 2, "more than once"),
        ("alternatives: x y z\nvoter: x > y\n", 2, "missing"),
        ("alternatives: x y\nvoter: x > > y\n", 2, "empty group"),
        ("alternatives: x y\nvoter: x > y >\n", 2, "empty group"),
        ("alternatives: x y\nvoter:\n", 2, "empty group"),
        ("alternatives: x y\n", None, "no voter"),
        ("alternatives: x y\nvoter: x > y\nalternatives: x y\n", 3, "already declared"),
        ("alternatives: x\nvoter: x\n", 1, "at least two"),
        ("alternatives: x y x\nvoter: x > y\n", 1, "more than once"),
        ("voter: x > y\nalternatives: x y\n", 1, "before"),
        ("alternatives: x y\nvoter: x > y\nballot: x > y\n", 3, "unrecognized"),
        ("alternatives: x y\nvoter: x! > y\n", 2, "not a valid name"),
        ("alternatives: x y%\nvoter: x > y\n", 1, "not a valid name"),
        ("# only a comment\n", None, "alternatives"),
        ("", None, "alternatives"),
    ],
)
def test_parse_errors(text, lineno, reason):
    with pytest.raises(ParseError, match=reason) as excinfo:
        parse_profile(text)
    assert excinfo.value.line == lineno
    if lineno is not None:
        assert f"line {lineno}" in str(excinfo.value)


def test_serialize_canonical_form(example1):
    assert serialize_profile(example1) == EXAMPLE1_TEXT


def test_serialize_uses_tilde_for_ties(example2):
    text = serialize_profile(example2)
    assert "voter: w ~ x > y > z" in text
    assert "=" not in text


@given(profiles())
def test_round_trip(profile):
    assert parse_profile(serialize_profile(profile)) == profile


@given(profiles())
def test_serialization_is_idempotent(profile):
    text = serialize_profile(profile)
    assert serialize_profile(parse_profile(text)) == text
