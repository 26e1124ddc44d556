import pytest
from hypothesis import given, settings, strategies as st

from tridom.errors import IntraClassArc, ParseError, ValidationError
from tridom.gallai import EdgeColoredGraph
from tridom.generators import gen_Dk, gen_random_gallai, gen_random_multipartite_trianglefree
from tridom.io import parse_ecg, parse_mpd, serialize_ecg, serialize_mpd

from instances import cyclic_k22

K22_TEXT = "mpd 2 4\nclass 0 0 1\nclass 1 2 3\narc 0 2\narc 2 1\narc 1 3\narc 3 0\n"


def test_parse_cyclic_k22():
    assert parse_mpd(K22_TEXT) == cyclic_k22()


def test_comments_and_blank_lines():
    text = "# an example\n\nmpd 2 4   # header\nclass 0 0 1\n\nclass 1 2 3\narc 0 2\narc 2 1\narc 1 3\narc 3 0\n"
    assert parse_mpd(text) == cyclic_k22()


def test_serialization_is_canonical():
    shuffled = "mpd 2 4\nclass 0 1 0\nclass 1 3 2\narc 3 0\narc 1 3\narc 2 1\narc 0 2\n"
    assert serialize_mpd(parse_mpd(shuffled)) == "mpd 2 4\nclass 0 0 1\nclass 1 2 3\narc 0 2\narc 1 3\narc 2 1\narc 3 0\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("graph 2 2\n", 1),
        ("mpd 2\n", 1),
        ("mpd 2 2\nclass 0 0\nclass 2 1\n", 3),
        ("mpd 2 2\nclass 0 0\nclass 1 1\narc 0 x\n", 4),
        ("mpd 2 2\nclass 0 0\narc 0 1\nclass 1 1\n", 4),
        ("mpd 2 2\nclass 0 0\nclass 1 1\nedge 0 1\n", 4),
        ("mpd 3 2\nclass 0 0\nclass 1 1\n", 1),
        ("mpd 2 2\nclass 0 0\nclass 1 1\narc 0 -1\n", 4),
    ],
)
def test_mpd_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        parse_mpd(text)
    assert err.value.line == line
    assert str(err.value).startswith(f"line {line}:")


def test_validation_errors_pass_through():
    with pytest.raises(IntraClassArc):
        parse_mpd("mpd 1 1\nclass 0 0\narc 0 0\n")
    with pytest.raises(ValidationError):
        parse_mpd("mpd 2 2\nclass 0 0\nclass 1 1\narc 0 1\narc 1 0\n")


def test_parse_ecg():
    G = parse_ecg("ecg 3\nedge 0 1 1\nedge 0 2 1\nedge 1 2 2\n")
    assert G == EdgeColoredGraph(3, {(0, 1): 1, (0, 2): 1, (1, 2): 2})
    assert parse_ecg("ecg 4\n").color == {}


@pytest.mark.parametrize(
    "text",
    [
        "ecg 3\nedge 0 1 1\nedge 1 0 2\n",
        "ecg 3\nedge 0 0 1\n",
        "ecg 3\nedge 0 3 1\n",
        "ecg 3\nedge 0 1\n",
        "ecg 3\nmpd 0 1 1\n",
        "edge 0 1 1\n",
    ],
)
def test_ecg_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ecg(text)


def test_ecg_serialization_orients_edges():
    assert serialize_ecg(parse_ecg("ecg 3\nedge 2 0 5\nedge 1 0 4\n")) == "ecg 3\nedge 0 1 4\nedge 0 2 5\n"


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(1, 3), st.floats(0, 1), st.integers(0, 10**6))
def test_mpd_round_trip(t, size, p, seed):
    D = gen_random_multipartite_trianglefree(t, size, p, seed)
    text = serialize_mpd(D)
    assert parse_mpd(text) == D
    assert serialize_mpd(parse_mpd(text)) == text


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 12), st.integers(1, 3), st.integers(0, 10**6))
def test_ecg_round_trip(n, alpha, seed):
    G = gen_random_gallai(n, 1, 3, seed).graph
    assert parse_ecg(serialize_ecg(G)) == G


def test_dk_round_trip():
    D = gen_Dk(2)
    assert parse_mpd(serialize_mpd(D)) == D
