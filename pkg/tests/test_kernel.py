"""Angular kernels: closed forms, symmetry, route agreement."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radlap.errors import DomainError, SingularityError
from radlap.kernel import (
    FracParams,
    alpha_n,
    kernel_H,
    kernel_K,
    kernel_h_at_one,
    kernel_weight,
    sphere_surface_area,
)

# Frozen values computed with mpmath.quad at 40 digits, n=4, s=0.3, tau=2.
H_ORACLE = 29.0904601731750198
K_ORACLE = 1.2539972739695194994
W_ORACLE = 10.031978191756155996


def test_h_against_frozen_oracle():
    p = FracParams(0.3, 4)
    assert kernel_H(p, 2.0) == pytest.approx(H_ORACLE, rel=1e-11)


def test_k_against_frozen_oracle():
    p = FracParams(0.3, 4)
    assert kernel_K(p, 2.0) == pytest.approx(K_ORACLE, rel=1e-11)


def test_weight_against_frozen_oracle():
    p = FracParams(0.3, 4)
    assert kernel_weight(p, 2.0) == pytest.approx(W_ORACLE, rel=1e-12)
    assert kernel_weight(p, 2.0, route="quadrature") == pytest.approx(
        W_ORACLE, rel=1e-11)


def test_h_at_one_closed_form_n3():
    # B(1, 1) reduction: H(1) = 4 pi at n=3, s=0.5
    assert kernel_h_at_one(FracParams(0.5, 3)) == pytest.approx(
        4.0 * math.pi, rel=1e-14)


def test_h_quadrature_continuous_at_one():
    p = FracParams(0.7, 5)
    assert kernel_H(p, 1.0) == pytest.approx(kernel_h_at_one(p), rel=1e-10)


def test_k_at_zero_is_sphere_area():
    p = FracParams(0.4, 6)
    assert kernel_K(p, 0.0) == pytest.approx(sphere_surface_area(6), rel=1e-12)


def test_sphere_areas_low_dimensions():
    assert sphere_surface_area(2) == pytest.approx(2.0 * math.pi, rel=1e-15)
    assert sphere_surface_area(3) == pytest.approx(4.0 * math.pi, rel=1e-15)


def test_alpha_n_values():
    assert alpha_n(3) == pytest.approx(1.0, rel=1e-15)
    assert alpha_n(2) == pytest.approx(1.0 / math.pi, rel=1e-14)


def test_k_inversion_symmetry():
    # K(1/xi) = xi^(n+2s) K(xi)
    p = FracParams(0.6, 4)
    for xi in (0.3, 0.5, 0.8):
        lhs = kernel_K(p, 1.0 / xi)
        rhs = xi ** (p.n + 2.0 * p.s) * kernel_K(p, xi)
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_h_k_relation():
    # H(tau) = tau^(n-2) (tau^2-1)^(1+2s) K(tau) for tau > 1
    p = FracParams(0.35, 5)
    for tau in (1.2, 2.0, 7.0):
        lhs = kernel_H(p, tau)
        rhs = tau ** (p.n - 2) * (tau * tau - 1.0) ** (1.0 + 2.0 * p.s) \
            * kernel_K(p, tau)
        assert lhs == pytest.approx(rhs, rel=1e-9)


def test_weight_routes_agree_near_singularity():
    p = FracParams(0.55, 4)
    for tau in (1.0 + 1e-6, 1.001, 1.04, 1.06, 3.0):
        closed = kernel_weight(p, tau, route="hypergeometric")
        quad = kernel_weight(p, tau, route="quadrature")
        auto = kernel_weight(p, tau, route="auto")
        assert quad == pytest.approx(closed, rel=1e-8)
        assert auto == pytest.approx(closed, rel=1e-8)


def test_weight_singular_scaling_limit():
    # (tau^2-1)^(1+2s) w(tau) / tau -> H(1) as tau -> 1
    p = FracParams(0.75, 5)
    tau = 1.0 + 1e-8
    t2m1 = 1e-8 * (2.0 + 1e-8)
    limit = kernel_weight(p, tau, route="quadrature") * t2m1 ** 2.5 / tau
    assert limit == pytest.approx(kernel_h_at_one(p), rel=1e-7)


def test_k_singularity_refused_at_one():
    with pytest.raises(SingularityError):
        kernel_K(FracParams(0.5, 3), 1.0)


def test_h_domain_below_one():
    with pytest.raises(DomainError):
        kernel_H(FracParams(0.5, 3), 0.9)


def test_weight_domain_at_one():
    with pytest.raises(DomainError):
        kernel_weight(FracParams(0.5, 3), 1.0)


def test_weight_unknown_route():
    with pytest.raises(ValueError):
        kernel_weight(FracParams(0.5, 3), 2.0, route="magic")


def test_params_validation():
    with pytest.raises(DomainError):
        FracParams(1.5, 3)
    with pytest.raises(DomainError):
        FracParams(0.5, 1)
    p = FracParams(1.5, 3, operator_use=False)  # condition checks allow it
    assert p.gamma == pytest.approx(0.0)


@settings(max_examples=15, deadline=None)
@given(s=st.floats(0.1, 0.9), n=st.integers(2, 8),
       logtau=st.floats(-4.0, 2.0))
def test_weight_positive_and_decreasing_property(s, n, logtau):
    p = FracParams(s, n)
    tau = 1.0 + 10.0 ** logtau
    w1 = kernel_weight(p, tau)
    w2 = kernel_weight(p, tau * 1.5)
    assert w1 > w2 > 0.0
