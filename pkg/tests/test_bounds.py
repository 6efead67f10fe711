import math
import warnings

import mpmath
import pytest

from frachyp.bounds import (UNSPECIFIED, bound_report, cherk_kozik_ab_bound, log_cherk_kozik_ab_bound, m_bounds_proper,
                            prop2_bound, prop2_regime)
from frachyp.construction import thm2_edge_total
from frachyp.errors import InvalidParams, RegimeWarning
from frachyp.theorem1 import edge_budget_thm1, log_edge_budget_thm1, thm1_regime

mp = mpmath.mpf


def test_m_bounds_n10_r2():
    lo, hi = m_bounds_proper(10, 2)
    assert lo == pytest.approx(float(mpmath.sqrt(10 / mpmath.log(10)) * 2 ** 9), rel=1e-12)
    assert hi == pytest.approx(float(100 * 1024 * mpmath.log(2)), rel=1e-12)
    assert round(lo, 1) == 1067.0 and abs(lo - 1066.9) < 0.1
    assert abs(hi - 70978) < 1


def test_m_bounds_ordered_on_grid():
    for n in range(3, 101):
        for r in range(2, 11):
            lo, hi = m_bounds_proper(n, r)
            assert lo < hi


def test_m_bounds_r2_form():
    for n in (5, 20, 60):
        lo, _ = m_bounds_proper(n, 2)
        assert lo == pytest.approx(2 ** n * math.sqrt(n / math.log(n)) / 2, rel=1e-12)


def test_m_bounds_invalid():
    with pytest.raises(InvalidParams):
        m_bounds_proper(1, 2)
    with pytest.raises(InvalidParams):
        m_bounds_proper(10, 1)


def test_cherk_kozik_value():
    assert cherk_kozik_ab_bound(20, 4, 2) == pytest.approx((20 / math.log(20)) ** 2 * 2 ** 19, rel=1e-12)


def test_cherk_kozik_rejects_k1():
    with pytest.raises(InvalidParams):
        cherk_kozik_ab_bound(10, 3, 2)


def test_thm1_eventually_beats_block_bound_when_b_does_not_divide_a():
    # (5/2)^(n-1) against 2^(n-1): the gap grows geometrically once it opens
    wins = [log_edge_budget_thm1(n, 5, 2) > log_cherk_kozik_ab_bound(n, 5, 2) for n in range(3, 400)]
    n0 = 3 + wins.index(True)
    assert all(wins[n0 - 3:])
    assert n0 == 23
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        assert edge_budget_thm1(22, 5, 2) < cherk_kozik_ab_bound(22, 5, 2)
        assert edge_budget_thm1(23, 5, 2) > cherk_kozik_ab_bound(23, 5, 2)


def test_prop2_examples():
    n = 10 ** 5
    assert prop2_regime(n, 4) and math.sqrt(n / (100 * math.log(n))) == pytest.approx(9.3, abs=0.05)
    val = prop2_bound(n, 4)
    ref = mpmath.exp(-mpmath.log(320) + mp(3) / 4 * mpmath.log(n / mpmath.log(n)) + n * mpmath.log(mp(4) / 3))
    assert bound_report("prop2", n, a=4)[0].value is None
    assert math.isinf(val) or val == pytest.approx(float(ref))
    for n in (50, 200, 1000):
        v = prop2_bound(n, 4)
        assert v * 20 * 16 / ((n / math.log(n)) ** 0.75 * (4 / 3) ** n) == pytest.approx(1)
    assert not prop2_regime(100, 10)


def test_thm1_not_applicable_for_b1():
    assert not thm1_regime(50, 5, 1)["theorem"]
    assert not bound_report("thm1", 50, a=5, b=1)[0].regime_ok


def test_thm2_above_thm1_in_regime():
    checked = 0
    for n in range(10, 80):
        for a in range(4, 10):
            for b in range(2, a - 1):
                if thm1_regime(n, a, b)["theorem"]:
                    assert thm2_edge_total(n, a, b) > edge_budget_thm1(n, a, b)
                    checked += 1
    assert checked > 50


def test_log_domain_agreement():
    with mpmath.workdps(40):
        for n in (5, 12, 30):
            for a, b in [(4, 2), (5, 2), (9, 3)]:
                r = bound_report("thm1", n, a=a, b=b)[0]
                ref = -mpmath.log(a * b ** 3) / 2 + mpmath.log(n / mpmath.log(n)) / 2 + (n - 1) * mpmath.log(mp(a) / b)
                assert r.log_value == pytest.approx(float(ref), rel=1e-10)
                r = bound_report("thm2", n, a=a, b=b)[0]
                ref = (mpmath.log(mpmath.e / 2) + 2 * mpmath.log(n) + n * mpmath.log(mp(a) / b) + mpmath.log(b)
                       + mpmath.log(mpmath.log(mp(a) / b) + 1))
                assert r.log_value == pytest.approx(float(ref), rel=1e-10)
                assert r.value == pytest.approx(thm2_edge_total(n, a, b), rel=1e-10)
                r = bound_report("eq5", n, a=a, b=b)[0]
                k = a // b
                ref = mp(k) / (k - 1) * mpmath.log(n / mpmath.log(n)) + (n - 1) * mpmath.log(k)
                assert r.log_value == pytest.approx(float(ref), rel=1e-10)


def test_reports_note_unspecified_constants():
    for which, kw in [("eq1", {"r": 3}), ("eq5", {"a": 6, "b": 2})]:
        for r in bound_report(which, 20, **kw):
            assert UNSPECIFIED in r.notes
            assert r.value > 0 and math.isfinite(r.value)


def test_huge_values_stay_in_log_domain():
    r = bound_report("thm2", 2000, a=4, b=2)[0]
    assert r.value is None and r.log_value > math.log(1e300)
    assert r.to_dict()["value"] is None


def test_bound_report_usage_errors():
    with pytest.raises(InvalidParams):
        bound_report("nope", 10)
    with pytest.raises(InvalidParams):
        bound_report("eq1", 10)
