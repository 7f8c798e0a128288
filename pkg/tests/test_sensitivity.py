import math
from fractions import Fraction

import pytest

from coinproof.sensitivity import (
    MAX_ENUM_N,
    avg_sensitivity_enum,
    avg_sensitivity_exact,
    avg_sensitivity_trig,
    measurement_bound_order,
    mod_m_star,
    sensitivity_at,
    sensitivity_result,
)


@pytest.mark.parametrize("bits,m,expected", [("0110", 2, 1), ("111", 3, 1), ("0111", 3, 0), ([0, 0, 0], 3, 1), ("", 4, 1)])
def test_mod_m_star(bits, m, expected):
    assert mod_m_star(bits, m) == expected


@pytest.mark.parametrize("bits,m,expected", [("000000", 3, 6), ("011111", 3, 1), ("0110", 2, 4), ("0111", 3, 1)])
def test_sensitivity_at(bits, m, expected):
    assert sensitivity_at(bits, m) == expected


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        mod_m_star("012", 2)
    with pytest.raises(ValueError):
        mod_m_star("01", 1)
    with pytest.raises(ValueError):
        avg_sensitivity_enum(MAX_ENUM_N + 1, 3)


def test_small_values():
    assert avg_sensitivity_enum(6, 3) == Fraction(33, 8) == avg_sensitivity_exact(6, 3)
    assert avg_sensitivity_enum(4, 2) == 4
    assert avg_sensitivity_enum(1, 2) == 1


def test_enum_matches_pointwise_mean():
    # independent of numpy: average sensitivity_at over all inputs
    for n, m in [(5, 2), (6, 3), (7, 4)]:
        total = sum(sensitivity_at(format(w, f"0{n}b"), m) for w in range(2**n))
        assert Fraction(total, 2**n) == avg_sensitivity_enum(n, m)


def test_enum_equals_exact_n20():
    assert avg_sensitivity_enum(20, 5) == avg_sensitivity_exact(20, 5)


def test_parity_is_n():
    for n in range(1, 40):
        assert avg_sensitivity_exact(n, 2) == n


def test_trig_form():
    for n in range(1, 65):
        for m in range(2, 10):
            assert avg_sensitivity_trig(n, m) == pytest.approx(float(avg_sensitivity_exact(n, m)), rel=1e-6)


def test_bound_order():
    assert measurement_bound_order(100, 5) == pytest.approx(4.0, abs=1e-3)
    for n in (4, 9, 50):
        assert measurement_bound_order(n, 2) == pytest.approx(math.sqrt(n))


def test_result_record():
    r = sensitivity_result(6, 3)
    assert r.exact == Fraction(33, 8)
    assert r.asymptote == 4
    d = r.to_dict()
    assert list(d) == ["n", "m", "exact", "trig", "asymptote", "bound_order"]
    assert d["exact"] == {"fraction": "33/8", "decimal": 4.125}
