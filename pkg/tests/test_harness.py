import pytest

from thetapaths.bijections import MAPS, BijectionId
from thetapaths.harness import (
    MAX_WITNESSES,
    VerificationReport,
    certify_inverse,
    format_aggregate,
    load_figure1_fixture,
    quadrant_escapes,
    reproduce_figure1,
    verify_all,
    verify_bijection,
)
from thetapaths.errors import ResourceLimitError


def test_psi_phi_n1():
    r = verify_bijection("psi", "phi", 1)
    assert r.verdict == "pass"
    assert r.domain_size == r.image_valid_count == r.distinct_image_count == 16
    assert r.round_trip_failures == [] and r.invalid_images == []


def test_psi_phi_n0():
    r = verify_bijection(BijectionId.psi, BijectionId.phi, 0)
    assert r.passed and r.domain_size == 2


def test_reverse_direction():
    r = verify_bijection("phi", "psi", 2)
    assert r.passed and r.domain_size == 90


def test_negative_control_fails_with_witnesses():
    r = verify_bijection("psi_swapped", None, 1)
    assert r.verdict == "fail"
    assert r.image_valid_count < r.domain_size
    assert 1 <= len(r.invalid_images) <= MAX_WITNESSES
    escapes = {(str(t), w) for t, w, _ in quadrant_escapes(1)}
    assert ("134/25/6", "EESN") in escapes


def test_witness_cap():
    r = verify_bijection("psi_swapped", None, 3)
    assert len(r.invalid_images) == MAX_WITNESSES
    assert r.domain_size - r.image_valid_count > MAX_WITNESSES


def test_mismatched_inverse_is_caught():
    # psi paired with xi's inverse must produce round-trip failures
    r = verify_bijection("psi", "xi_inv", 1)
    assert not r.passed
    assert r.round_trip_failure_total > 0
    assert len(r.round_trip_failures) <= MAX_WITNESSES


def test_non_surjective_map_is_caught(monkeypatch):
    original = MAPS[BijectionId.psi]
    first = None

    def collapsed(t):
        nonlocal first
        image = original(t)
        if first is None:
            first = image
        return first if t.rows == ((1, 3), (2, 4)) else image

    monkeypatch.setitem(MAPS, BijectionId.psi, collapsed)
    r = verify_bijection("psi", None, 0)
    assert r.distinct_image_count == 1
    assert not r.image_equals_codomain
    assert not r.passed


def test_inverse_pairing_checked():
    with pytest.raises(ValueError):
        verify_bijection("psi", "xi", 1)


def test_unknown_map():
    with pytest.raises(KeyError):
        verify_bijection("kappa", None, 1)


def test_resource_limit_propagates():
    with pytest.raises(ResourceLimitError):
        verify_bijection("psi", "phi", 5, cap=10)


def test_report_verdict_rule():
    base = dict(map_name="psi", n=1, domain_size=16, image_valid_count=16,
                distinct_image_count=16, codomain_size=16, image_equals_codomain=True)
    assert VerificationReport(**base).passed
    assert not VerificationReport(**{**base, "distinct_image_count": 15}).passed
    assert not VerificationReport(**base, round_trip_failures=[("d", "x", "y", "z")]).passed


@pytest.mark.parametrize("n", range(7))
def test_xi_inverse_certified(n, family_cache):
    c = certify_inverse("xi", "xi_inv", n, cache=family_cache)
    assert c.passed, c.mismatches
    assert c.checked == len(family_cache["path", n])


def test_certificate_catches_wrong_inverse():
    c = certify_inverse("xi", "phi", 1)
    assert not c.passed


def test_reports_deterministic(family_cache):
    a = verify_bijection("psi_swapped", None, 4, cache=family_cache)
    b = verify_bijection("psi_swapped", None, 4)
    assert a == b  # elapsed is excluded from equality


def test_figure1():
    result = reproduce_figure1()
    assert result.verdict == "match"
    assert result.matches == result.expected == 16
    assert result.pairs[0] == ("123/45/6", "ENSN")
    assert result.pairs[-1] == ("146/25/3", "NEWE")


def test_figure1_fixture_is_plain_data():
    pairs = load_figure1_fixture()
    assert len(pairs) == 16
    assert len({t for t, _ in pairs}) == 16
    assert len({p for _, p in pairs}) == 16


def test_verify_all_small():
    agg = verify_all(0)
    assert agg.passed
    assert all(r.domain_size == 2 for r in agg.bijections)
    # n = 0 negative control also fails, and is recorded
    assert not agg.negative_controls[0].passed
    assert agg.escape_witnesses[0] == ("12/34", "NW", 2)


def test_verify_all_three():
    agg = verify_all(3)
    assert agg.passed
    assert [r.domain_size for r in agg.bijections if r.n == 3] == [448] * 4
    text = format_aggregate(agg)
    assert text.rstrip().endswith("aggregate: pass")
    machine = format_aggregate(agg, machine=True)
    assert machine.splitlines()[-1] == "aggregate\tpass"
    assert all("\t" in line for line in machine.splitlines())
