"""Exact-rational case constants and the hypergeometric inequality chain."""

import math
from fractions import Fraction

import pytest

from radlap.errors import DomainError, InfiniteDerivative, PreconditionError
from radlap.hessianx import (
    bound_g,
    check_fg_inequality,
    check_g_concavity,
    check_iterated_condition,
    check_log_convexity,
    f_prime_at_1,
    g_prime_at_1,
    make_case,
    ratio_f,
    tangent_report,
)
from radlap.hypergeom import HyperParams, f21, f21_derivative


def test_case_constants_k2_n5():
    case = make_case(2, 5)
    assert case.alpha == Fraction(4, 3)
    assert case.beta == Fraction(1, 2)
    assert case.s == Fraction(2, 3)
    assert case.a == Fraction(19, 6)
    assert case.b == Fraction(11, 12)
    assert case.c == Fraction(5, 2)


def test_construction_identities_exact():
    for k in (2, 3, 5):
        for n in (2 * k, 2 * k + 1, 3 * k, 17):
            case = make_case(k, n)
            assert case.d1 ** 2 + case.d3 == (2 * case.c - case.b) ** 2
            assert case.d3 == 4 * case.a * case.b * (k - 1)
            assert (case.d3 - 4 * case.d2 * (case.d1 + case.d2)
                    == 4 * (case.c + 1) * (case.c - case.b - 1))


def test_make_case_validation():
    with pytest.raises(DomainError):
        make_case(0, 5)
    with pytest.raises(DomainError):
        make_case(3, 5)  # n < 2k


def test_degenerate_flag():
    assert make_case(2, 4).degenerate
    assert not make_case(2, 5).degenerate


def test_tangent_slopes_k2_n5():
    case = make_case(2, 5)
    assert f_prime_at_1(case) == Fraction(152, 225)
    assert g_prime_at_1(case) == Fraction(38, 35)
    assert f_prime_at_1(case) < g_prime_at_1(case)
    rep = tangent_report(case)
    assert rep.chain_ok
    assert rep.f_at_1 == rep.g_at_1 == pytest.approx(float(Fraction(19, 15)))


def test_k1_slope_is_infinite():
    case = make_case(1, 3)
    with pytest.raises(InfiniteDerivative):
        f_prime_at_1(case)
    with pytest.raises(InfiniteDerivative):
        tangent_report(case)


def test_f_and_g_meet_at_one():
    case = make_case(3, 8)
    target = float(case.a / case.c)
    assert ratio_f(case, 1.0) == pytest.approx(target, rel=1e-12)
    assert bound_g(case, 1.0) == pytest.approx(target, rel=1e-14)


def test_f_at_zero_is_one():
    case = make_case(2, 7)
    assert ratio_f(case, 0.0) == 1.0


def test_ratio_f_domain():
    with pytest.raises(DomainError):
        ratio_f(make_case(2, 5), 1.5)
    with pytest.raises(DomainError):
        bound_g(make_case(2, 5), -0.1)


def test_g_concavity_holds():
    rep = check_g_concavity(make_case(2, 5))
    assert rep.holds
    assert rep.worst_margin <= 1e-10


def test_g_concavity_excludes_k1():
    with pytest.raises(PreconditionError):
        check_g_concavity(make_case(1, 4))


def test_fg_inequality_holds_k2_n5():
    rep = check_fg_inequality(make_case(2, 5))
    assert rep.holds
    assert rep.worst_margin >= -1e-9


def test_log_convexity_holds_k2_n5():
    rep = check_log_convexity(make_case(2, 5))
    assert rep.holds
    assert rep.worst_margin >= -1e-9


def test_iterated_condition_holds_k2_n5():
    rep = check_iterated_condition(make_case(2, 5))
    assert rep.holds
    assert rep.worst_margin <= 1e-8


def test_iterated_condition_vacuous_when_degenerate():
    rep = check_iterated_condition(make_case(3, 6))
    assert rep.holds
    assert rep.samples_checked == 0


def test_iterated_condition_rejects_k1():
    with pytest.raises(PreconditionError):
        check_iterated_condition(make_case(1, 3))


def test_hypergeometric_ode_residual_for_case_params():
    # x(1-x) F'' + (c - (a+b+1)x) F' - a b F = 0
    case = make_case(2, 5)
    p = case.hyper_params()
    a, b, c = p.a, p.b, p.c
    for x in (-3.0, -0.5, 0.2, 0.8):
        fv = f21(p, x)
        fp = f21_derivative(p, x)
        fpp = (a * b / c) * f21_derivative(p.shifted(1, 1, 1), x)
        resid = x * (1.0 - x) * fpp + (c - (a + b + 1.0) * x) * fp - a * b * fv
        scale = abs(x * (1.0 - x) * fpp) + abs(fp) + abs(a * b * fv)
        assert abs(resid) <= 1e-10 * scale


def test_f_monotone_decreasing_toward_minus_infinity():
    # f(t) = F(c-a,b,c,t)/F(c-a,b+1,c+1,t) increases in t for these cases
    case = make_case(2, 6)
    values = [ratio_f(case, t) for t in (-4.0, -1.0, 0.0, 0.5, 0.9)]
    assert all(v1 < v2 for v1, v2 in zip(values, values[1:]))


def test_g_prime_exceeds_f_prime_across_cases():
    for k in (2, 3, 4):
        for n in (2 * k + 1, 2 * k + 3, 15):
            case = make_case(k, n)
            assert f_prime_at_1(case) < g_prime_at_1(case)
