import math

import pytest

from thetapaths.enumeration import (
    CountReport,
    count_paths_closed_form,
    count_tableaux_closed_form,
    cross_check,
)
from thetapaths.lattice_paths import brute_force_paths
from thetapaths.tableaux import ThetaShape, hook_length_count

# Frozen from independent evaluations (sympy rational arithmetic and a
# box-by-box hook product), not from this package.
KNOWN = {
    0: 2, 1: 16, 2: 90, 3: 448, 4: 2100, 5: 9504, 6: 42042,
    7: 183040, 8: 787644, 20: 21579247511640, 30: 27954790467394119098,
}


@pytest.mark.parametrize("n, value", sorted(KNOWN.items()))
def test_closed_forms(n, value):
    assert count_paths_closed_form(n) == value
    assert count_tableaux_closed_form(n) == value


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_closed_form_matches_brute_force(n):
    assert count_paths_closed_form(n) == len(brute_force_paths(n))


@pytest.mark.parametrize("n", range(31))
def test_all_routes_agree(n):
    value = count_paths_closed_form(n)
    assert value == count_tableaux_closed_form(n) == hook_length_count(ThetaShape(n).rows)


@pytest.mark.parametrize("n", range(31))
def test_division_is_exact(n):
    assert math.comb(2 * n, n) * (4 * n + 4) * (2 * n + 1) % (n + 2) == 0


def test_results_are_ints():
    assert type(count_paths_closed_form(30)) is int
    assert count_paths_closed_form(30) > 2**64


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        count_paths_closed_form(-1)


def test_cross_check_exhaustive():
    r = cross_check(1, exhaustive=True)
    assert r.values() == [16] * 5
    assert r.consistent
    r = cross_check(0, exhaustive=True)
    assert r.values() == [2] * 5 and r.consistent


def test_cross_check_closed_only():
    r = cross_check(20)
    assert r.enumerated_paths is None and r.enumerated_tableaux is None
    assert r.values() == [KNOWN[20]] * 3
    assert r.consistent


def test_inconsistent_report():
    r = CountReport(3, 448, 448, 448, enumerated_paths=447)
    assert not r.consistent


def test_report_serialization():
    r = cross_check(1, exhaustive=True)
    text = r.to_text()
    assert "closed_form_paths     16" in text
    assert text.splitlines()[-1].split() == ["consistent", "True"]
    assert r.to_machine() == "1\t16\t16\t16\t16\t16\ttrue"
    assert CountReport.machine_header().split("\t")[0] == "n"
    assert cross_check(2).to_machine() == "2\t90\t90\t90\t\t\ttrue"
