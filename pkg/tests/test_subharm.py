"""Pointwise subharmonicity criteria, mollification, maximum principle."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radlap.errors import DomainError, MissingDerivative, PreconditionError
from radlap.fraclap import RadialProfile, fbeta_profile, power_profile
from radlap.kernel import FracParams
from radlap.subharm import (
    ConditionGrid,
    check_cond1,
    check_cond2,
    check_equivalence_1_7_vs_1_8,
    check_kconvex_radial,
    check_max_principle,
    kconvex_order_s,
    mellin_mollify,
)

SMALL_GRID = ConditionGrid(
    tuple(10.0 ** (-2.0 + 4.0 * j / 15.0) for j in range(16)),
    tuple(math.exp(1e-3 + 8.0 * j / 15.0) for j in range(16)),
)


def test_critical_fbeta_satisfies_both_conditions():
    p = FracParams(0.6, 4)  # gamma = 2.8
    u = fbeta_profile(p.gamma)
    assert check_cond1(u, p, SMALL_GRID).holds
    assert check_cond2(u, p, SMALL_GRID.r_values).holds


def test_supercritical_fbeta_fails_with_reported_location():
    p = FracParams(0.6, 4)
    u = fbeta_profile(p.gamma + 0.3)
    rep1 = check_cond1(u, p, SMALL_GRID)
    rep2 = check_cond2(u, p, SMALL_GRID.r_values)
    assert not rep1.holds and rep1.worst_location is not None
    assert not rep2.holds and rep2.worst_location is not None


def test_equivalence_report_agreement():
    p = FracParams(0.6, 4)
    for beta in (0.5 * p.gamma, p.gamma, p.gamma + 0.5):
        rep = check_equivalence_1_7_vs_1_8(fbeta_profile(beta), p, SMALL_GRID)
        assert rep.holds


def test_critical_power_is_marginal_for_both():
    # u = -r^(-gamma): the bracket and the ODE form are identically zero
    p = FracParams(0.5, 3)
    u = power_profile(p.gamma)
    rep1 = check_cond1(u, p, SMALL_GRID)
    rep2 = check_cond2(u, p, SMALL_GRID.r_values)
    assert rep1.holds and rep1.worst_margin == 0.0
    assert rep2.holds and abs(rep2.worst_margin) <= 1e-12


def test_cond2_requires_derivatives():
    u = RadialProfile(value=lambda r: -1.0)
    with pytest.raises(MissingDerivative):
        check_cond2(u, FracParams(0.5, 3))


def test_cond1_accepts_any_real_s():
    p = FracParams(1.4, 5, operator_use=False)
    u = fbeta_profile(1.0)
    rep = check_cond1(u, p, SMALL_GRID)
    assert rep.samples_checked == 256


def test_kconvex_order_values():
    assert kconvex_order_s(1, 7) == pytest.approx(1.0)
    assert kconvex_order_s(2, 6) == pytest.approx(2.5)
    with pytest.raises(DomainError):
        kconvex_order_s(4, 3)


def test_kconvex_harmonic_power_is_marginal():
    # -r^(2-n) is harmonic away from the origin: 1-convexity with zero margin
    n = 5
    u = power_profile(n - 2.0)
    rep = check_kconvex_radial(u, 1, n, SMALL_GRID.r_values)
    assert rep.holds
    assert abs(rep.worst_margin) <= 1e-12


def test_grid_validation():
    with pytest.raises(DomainError):
        ConditionGrid((1.0, 0.5), (1.0, 2.0))  # r not increasing
    with pytest.raises(DomainError):
        ConditionGrid((1.0, 2.0), (0.5, 2.0))  # tau below 1
    with pytest.raises(DomainError):
        ConditionGrid((), (1.0,))


def test_mollify_fixes_constants():
    u = RadialProfile(value=lambda r: -3.0)
    for eps in (0.1, 0.01):
        um = mellin_mollify(u, eps)
        for r in (0.01, 1.0, 100.0):
            assert um.value(r) == pytest.approx(-3.0, abs=1e-12)


def test_mollify_scales_powers_by_positive_factor():
    # Mellin convolution maps r^p to m(p) r^p with m(p) > 0
    u = power_profile(2.0)
    um = mellin_mollify(u, 0.1)
    ratios = [um.value(r) / u.value(r) for r in (0.1, 1.0, 10.0)]
    assert ratios[0] > 0.0
    assert ratios[0] == pytest.approx(ratios[1], rel=1e-10)
    assert ratios[1] == pytest.approx(ratios[2], rel=1e-10)


def test_mollify_preserves_cond1():
    p = FracParams(0.6, 4)
    u = fbeta_profile(0.7 * p.gamma)
    assert check_cond1(u, p, SMALL_GRID).holds
    for eps in (0.1, 0.01):
        um = mellin_mollify(u, eps)
        assert check_cond1(um, p, SMALL_GRID, slack=1e-10).holds


def test_mollify_validates_epsilon():
    with pytest.raises(DomainError):
        mellin_mollify(fbeta_profile(1.0), 0.0)


def test_max_principle_holds_for_subharmonic_profile():
    p = FracParams(0.6, 4)
    u = fbeta_profile(p.gamma)
    rep = check_max_principle(u, p, SMALL_GRID)
    assert rep.holds


def test_max_principle_constant_branch():
    p = FracParams(0.5, 3)
    u = RadialProfile(value=lambda r: -1.0)
    rep = check_max_principle(u, p, SMALL_GRID)
    assert rep.holds and rep.worst_margin == 0.0


def test_max_principle_requires_cond1():
    p = FracParams(0.6, 4)
    u = fbeta_profile(p.gamma + 1.0)  # violates cond-1
    with pytest.raises(PreconditionError):
        check_max_principle(u, p, SMALL_GRID)


@settings(max_examples=15, deadline=None)
@given(frac=st.floats(0.1, 1.0), s=st.floats(0.15, 0.95))
def test_subcritical_fbeta_always_passes(frac, s):
    p = FracParams(s, 5)
    u = fbeta_profile(frac * p.gamma)
    assert check_cond2(u, p, SMALL_GRID.r_values).holds
