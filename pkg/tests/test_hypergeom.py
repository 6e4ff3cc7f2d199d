"""Gauss hypergeometric engine against frozen high-precision oracles."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radlap.errors import DomainError, PoleError
from radlap.hypergeom import (
    HyperParams,
    f21,
    f21_at_one,
    f21_derivative,
    f21_euler_integral,
    f21_pfaff,
    f21_with_complement,
    gamma,
    log_gamma,
)

# Frozen values computed with mpmath.hyp2f1 at 40 significant digits.
MP_ORACLE = [
    ((0.3, 0.7, 1.9), -0.8, 0.93080405471256181197),
    ((2.5, 1.2, 3.1), 0.45, 1.7556785598611264645),
    ((1.1, 0.4, 2.2), 0.9, 1.3774316372214365793),
    ((-0.5, 0.5, 2.0), 0.999, 0.8490380507303928152),
    ((0.9, 1.3, 2.05), -30.0, 0.093103027266119804474),
    ((3.0, 0.25, 3.5), 0.5, 1.1534525754260716396),
    ((1.75, 0.6, 2.4), 0.99999, 8.2230707622376801489),
]


@pytest.mark.parametrize("abc,x,expected", MP_ORACLE)
def test_f21_against_frozen_oracle(abc, x, expected):
    assert f21(HyperParams(*abc), x) == pytest.approx(expected, rel=5e-13)


def test_f21_terminating_polynomial_is_exact():
    # a = -1: F = 1 - b x / c with no truncation error
    p = HyperParams(-1.0, 2.0, 4.0)
    assert f21(p, 0.3) == 1.0 - 2.0 * 0.3 / 4.0


def test_f21_at_zero_is_one():
    assert f21(HyperParams(1.3, 0.7, 2.1), 0.0) == 1.0


def test_f21_elementary_identity_log():
    # F(1,1,2,x) = -ln(1-x)/x
    for x in (-0.7, 0.3, 0.6, 0.95):
        expected = -math.log1p(-x) / x
        assert f21(HyperParams(1.0, 1.0, 2.0), x) == pytest.approx(
            expected, rel=1e-13)


def test_f21_elementary_identity_atanh():
    # F(1/2, 1, 3/2, x^2) = atanh(x)/x
    for x in (0.2, 0.5, 0.9):
        expected = math.atanh(x) / x
        assert f21(HyperParams(0.5, 1.0, 1.5), x * x) == pytest.approx(
            expected, rel=1e-13)


def test_gauss_value_at_one():
    # F(-1/2, 1/2, 2, 1) = 8/(3 pi)
    assert f21_at_one(HyperParams(-0.5, 0.5, 2.0)) == pytest.approx(
        8.0 / (3.0 * math.pi), abs=1e-14)


def test_gauss_at_one_requires_convergence():
    with pytest.raises(DomainError):
        f21_at_one(HyperParams(2.0, 1.5, 3.0))  # c - a - b < 0


def test_f21_domain_cut():
    with pytest.raises(DomainError):
        f21(HyperParams(1.0, 1.0, 2.0), 1.5)


def test_hyperparams_rejects_nonpositive_integer_c():
    with pytest.raises(DomainError):
        HyperParams(1.0, 1.0, -2.0)


def test_gamma_against_stdlib():
    for x in (0.5, 1.0, 2.5, 7.3, 0.01):
        assert log_gamma(x) == pytest.approx(math.lgamma(x), abs=1e-12)
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_reflection_negative_arguments():
    assert gamma(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-13)
    with pytest.raises(PoleError):
        gamma(-3.0)


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(DomainError):
        log_gamma(0.0)


def test_three_routes_agree_spot_checks():
    rng = random.Random(7)
    for _ in range(50):
        b = rng.uniform(0.1, 2.5)
        c = b + rng.uniform(0.1, 2.5)
        a = rng.uniform(-2.0, 3.0)
        x = rng.uniform(-0.99, 0.45)
        p = HyperParams(a, b, c)
        direct = f21(p, x)
        pfaff = f21_pfaff(p, x)
        euler = f21_euler_integral(p, x)
        assert pfaff == pytest.approx(direct, rel=1e-10, abs=1e-12)
        assert euler == pytest.approx(direct, rel=1e-10, abs=1e-12)


def test_with_complement_matches_plain_evaluation():
    p = HyperParams(1.2, 0.8, 2.6)
    x = 0.875
    assert f21_with_complement(p, x, 1.0 - x) == pytest.approx(
        f21(p, x), rel=1e-13)


def test_with_complement_handles_argument_rounding_to_one():
    # complement below one ulp: x rounds to 1 but one_minus_x carries
    # the true distance; params with c > a + b stay finite there
    p = HyperParams(0.25, 0.5, 2.0)
    val = f21_with_complement(p, 1.0, 1e-18)
    assert val == pytest.approx(f21_at_one(p), rel=1e-9)


def test_derivative_matches_finite_difference():
    p = HyperParams(1.3, 0.6, 2.2)
    for x in (-0.5, 0.2, 0.7):
        h = 1e-6
        fd = (f21(p, x + h) - f21(p, x - h)) / (2.0 * h)
        assert f21_derivative(p, x) == pytest.approx(fd, rel=1e-8)


def test_derivative_zero_when_a_is_zero():
    assert f21_derivative(HyperParams(0.0, 1.0, 2.0), 0.5) == 0.0


@settings(max_examples=40, deadline=None)
@given(
    a=st.floats(-2, 3), b=st.floats(0.1, 2.5),
    extra=st.floats(0.1, 2.5), x=st.floats(-0.99, 0.45),
)
def test_pfaff_identity_property(a, b, extra, x):
    p = HyperParams(a, b, b + extra)
    assert f21_pfaff(p, x) == pytest.approx(f21(p, x), rel=1e-9, abs=1e-11)


@settings(max_examples=30, deadline=None)
@given(b=st.floats(0.1, 2.0), extra=st.floats(0.2, 2.0),
       x=st.floats(0.0, 0.999))
def test_positive_series_monotone_in_x(b, extra, x):
    # all series coefficients positive: F(x) >= F(x/2) >= 1
    p = HyperParams(0.5, b, b + extra)
    assert f21(p, x) >= f21(p, 0.5 * x) >= 1.0
