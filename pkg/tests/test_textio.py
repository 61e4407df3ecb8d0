import random

import pytest
from hypothesis import given, settings, strategies as st

from addiso.cli import random_gen_matrix
from addiso.errors import ParseError
from addiso.gf_tower import make_field_pair
from addiso.isometry import CodeMap
from addiso.solutions import SweepReport, build_counterexample, sweep_theorem
from addiso.textio import format_code, format_map, format_report, parse_code, parse_map, parse_report


def test_parse_code_mixed_elements(ex2):
    text = "field GF(2)^2\nk 3\nm 3\nrow 1 1 0\nrow [0,1] [0, 1] 0\n  row 1 0 1  # trailing\n"
    assert parse_code(text) == ex2


def test_parse_map(ex3, datadir):
    assert parse_map((datadir / "ex3.map").read_text()) == ex3


@pytest.mark.parametrize("text, line, col", [
    ("field GF(2)^2\nk 1\nm 2\nrow 1 9\n", 4, 7),
    ("field GF(2)^2\nk 1\nm 2\nrow 1\n", 4, 5),
    ("field GF(2)^2\nk x\n", 2, 3),
    ("field GF(2)^2\nm 2\n", 2, 1),
    ("field GF(4)^2\nk 1\n", 1, 7),
    ("field GF(2)^2\nk 1\nm 2\nrow [1,1,1] 0\n", 4, 5),
    ("field GF(2)^2\nk 1\nm 2\nrow 1 0\nrow 1 1\n", 5, 1),
    ("field GF(2)^2\nk 2\nm 2\nrow 1 0\nrow 1 0\n", 4, 1),
    ("field GF(2)^2\nk 1\nm 2\n", 4, 1),
])
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_code(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert str(info.value).startswith(f"line {line}, col {col}: ")


def test_map_needs_image_rows(ex2):
    with pytest.raises(ParseError) as info:
        parse_map(format_code(ex2) + "image 1 1 0\n")
    assert info.value.line == 8          # one line past the single image row


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([(2, 1, 2), (3, 1, 2), (2, 2, 2), (2, 1, 3)]), st.integers(0, 2 ** 32))
def test_code_and_map_roundtrip(spec, seed):
    fp = make_field_pair(*spec)
    rng = random.Random(seed)
    m = rng.randint(1, 4)
    A = random_gen_matrix(fp, min(rng.randint(0, 3), fp.n * m), m, rng)
    assert parse_code(format_code(A)) == A
    image = tuple(tuple(rng.randrange(fp.L.size) for _ in range(m)) for _ in range(A.k))
    f = CodeMap(A, image)
    assert parse_map(format_map(f)) == f


def test_counterexample_roundtrip():
    for spec, m in [((2, 1, 2), 3), ((3, 1, 2), 5), ((2, 2, 2), 5)]:
        f = build_counterexample(make_field_pair(*spec), m)
        assert parse_map(format_map(f)) == f


def test_report_roundtrip(f4):
    r = sweep_theorem(f4, 3, 1, witness_cap=4)
    assert parse_report(format_report(r)) == r
    wit = SweepReport("GF(2)^2", 2, 2, 3, 2, codes=1, isometries=2, extendible=1, unextendible=1,
                      dedupe=True, witness_cap=1,
                      witnesses=[(((1, 1, 0), (0, 1, 2)), ((1, 1, 0), (2, 2, 0)))])
    text = format_report(wit)
    assert "witness: 1 1 0 ; 0 1 2 -> 1 1 0 ; 2 2 0" in text
    assert parse_report(text) == wit


def test_report_parse_errors():
    with pytest.raises(ParseError):
        parse_report("report: other\n")
    with pytest.raises(ParseError):
        parse_report("report: sweep\nfield: GF(2)^2\nq: two\n")
