from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from thetapaths.enumeration import count_paths_closed_form
from thetapaths.errors import ContractViolation, ResourceLimitError
from thetapaths.lattice_paths import (
    LatticePath,
    Step,
    backward_step_index,
    brute_force_paths,
    enumerate_paths,
    parse_path_render,
    read_path_lines,
    render_path_text,
    trace_positions,
    validate_path,
)

from conftest import N_PROPERTY

GOLDEN = Path(__file__).parent / "golden"


def test_step_classification():
    assert {s for s in Step if s.is_forward} == {Step.N, Step.E}
    assert {s for s in Step if s.is_backward} == {Step.S, Step.W}
    assert Step.N.displacement == (0, 1)
    assert Step.W.displacement == (-1, 0)


@pytest.mark.parametrize("word, n", [("NNES", 1), ("ENSN", 1), ("EW", 0), ("NS", 0)])
def test_validate_accepts(word, n):
    assert validate_path(word, n).valid


def test_validate_accepts_step_sequence():
    assert validate_path([Step.N, Step.N, Step.E, Step.S], 1)


def test_validate_reports_quadrant_exit():
    v = validate_path("SN", 0)
    assert not v
    assert (v.reason, v.index) == ("quadrant", 1)


def test_validate_reports_endpoint():
    v = validate_path("NNEE", 1)
    assert v.reason == "endpoint"
    assert "(2, 2)" in v.detail


@pytest.mark.parametrize(
    "word, n, reason",
    [
        ("NNXS", 1, "bad-letter"),
        ("NNE", 1, "length"),
        ("", 0, "length"),
        ("NSNS", 1, "endpoint"),
    ],
)
def test_validate_other_failures(word, n, reason):
    assert validate_path(word, n).reason == reason


def test_lattice_path_construction_validates():
    assert LatticePath.from_word("NNES").n == 1
    with pytest.raises(ContractViolation):
        LatticePath(1, "NNEE")
    with pytest.raises(ContractViolation):
        LatticePath.from_word("NNE")


def test_one_based_indexing():
    p = LatticePath.from_word("NNES")
    assert (p[1], p[4]) == ("N", "S")
    assert p.steps == (Step.N, Step.N, Step.E, Step.S)
    with pytest.raises(IndexError):
        p[0]


@pytest.mark.parametrize("word, j", [("NNES", 4), ("ENSN", 3), ("EW", 2)])
def test_backward_step_index(word, j):
    assert backward_step_index(LatticePath.from_word(word)) == j


@pytest.mark.parametrize("word", ["NNEE", "NSSN"])
def test_backward_step_index_contract(word):
    with pytest.raises(ContractViolation):
        backward_step_index(word)


def test_trace_positions():
    assert trace_positions("NNES") == [(0, 0), (0, 1), (0, 2), (1, 2), (1, 1)]
    assert trace_positions("") == [(0, 0)]
    assert trace_positions("EW") == [(0, 0), (1, 0), (0, 0)]


def test_enumerate_small():
    assert [p.word for p in enumerate_paths(0)] == ["EW", "NS"]
    assert len(enumerate_paths(1)) == 16
    assert len(enumerate_paths(2)) == 90


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_enumerate_matches_brute_force(n):
    # brute force scans E < N < S < W order already, so lists compare directly
    assert [p.word for p in enumerate_paths(n)] == brute_force_paths(n)


@pytest.mark.parametrize("n", range(N_PROPERTY + 1))
def test_enumeration_properties(n, paths_of):
    words = [p.word for p in paths_of(n)]
    assert all(validate_path(w, n) for w in words)
    assert all(a < b for a, b in zip(words, words[1:]))
    assert len(words) == count_paths_closed_form(n)


@pytest.mark.parametrize("n", range(N_PROPERTY + 1))
def test_removing_backward_step(n, paths_of):
    for p in paths_of(n):
        j = backward_step_index(p)
        rest = p.word[: j - 1] + p.word[j:]
        end = trace_positions(rest)[-1]
        assert end == ((n + 1, n) if p[j] == "W" else (n, n + 1))


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_paths(5, cap=100)
    with pytest.raises(ValueError):
        enumerate_paths(-1)


@given(st.text(alphabet="NSEW", max_size=10), st.integers(0, 4))
def test_trace_agrees_with_validate(word, n):
    points = trace_positions(word)
    in_quadrant = all(x >= 0 and y >= 0 for x, y in points)
    expected = in_quadrant and points[-1] == (n, n) and len(word) == 2 * n + 2
    assert bool(validate_path(word, n)) == expected


@pytest.mark.parametrize("word", ["NNES", "NS", "EW", "NSNE"])
def test_render_golden(word):
    assert render_path_text(word) == (GOLDEN / f"path_{word}.txt").read_text()


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_render_round_trip_exhaustive(n, paths_of):
    for p in paths_of(n):
        assert parse_path_render(render_path_text(p)) == p.word


@given(st.text(alphabet="NSEW", min_size=1, max_size=25))
def test_render_round_trip_any_walk(word):
    assert parse_path_render(render_path_text(word)) == word


def test_read_path_lines_skips_comments():
    lines = ["# header\n", "NNES\n", "\n", "  EW  \n"]
    assert list(read_path_lines(lines)) == [(2, "NNES"), (4, "EW")]
