import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orlnorm import EXT_INF, EXT_ZERO, DomainError, ExtendedReal

finite_vals = st.floats(min_value=0.0, max_value=1e12, allow_nan=False)
ext_vals = st.one_of(finite_vals.map(ExtendedReal), st.just(EXT_INF))


def test_rejects_negative_and_nan():
    with pytest.raises(DomainError):
        ExtendedReal(-1.0)
    with pytest.raises(DomainError):
        ExtendedReal(math.nan)


def test_infinity_absorbs_addition_and_positive_scaling():
    assert (EXT_INF + 5.0).is_infinite
    assert (ExtendedReal(3.0) + EXT_INF).is_infinite
    assert EXT_INF.scaled(2.5).is_infinite


def test_zero_times_infinity_is_zero():
    assert EXT_INF.scaled(0.0) == EXT_ZERO
    assert (0.0 * EXT_INF).value == 0.0


def test_ordering_places_infinity_on_top():
    assert ExtendedReal(1e308) < EXT_INF
    assert EXT_INF >= ExtendedReal(0.0)
    assert EXT_ZERO <= ExtendedReal(1.0)
    assert float(EXT_INF) == math.inf


@given(ext_vals, ext_vals)
def test_addition_commutes(a, b):
    assert (a + b).value == (b + a).value


@given(ext_vals, ext_vals, ext_vals)
def test_addition_associates(a, b, c):
    left = ((a + b) + c).value
    right = (a + (b + c)).value
    assert left == right or math.isclose(left, right, rel_tol=1e-12)


@given(ext_vals, st.floats(min_value=0.0, max_value=1e6, allow_nan=False))
def test_scaling_monotone(a, c):
    scaled = a.scaled(c)
    assert scaled.value >= 0.0
    if c >= 1.0:
        assert scaled >= a.scaled(1.0).value * min(c, 1.0) or not a.is_finite


@given(finite_vals, finite_vals)
def test_finite_arithmetic_matches_floats(a, b):
    assert (ExtendedReal(a) + ExtendedReal(b)).value == a + b
