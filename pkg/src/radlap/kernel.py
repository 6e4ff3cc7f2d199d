"""Angular kernels of the radial fractional Laplacian representation.

For a radial function, (-Delta)^s u(r) reduces to a one-dimensional
integral over tau >= 1 against the weight tau (tau^2-1)^(-1-2s) H(tau),
where H collects the angular integration over the sphere.  This module
evaluates H, the companion kernel K, the dimensional constant alpha_n,
and the hypergeometric closed form of the weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, SingularityError
from .hypergeom import HyperParams, f21_with_complement, log_gamma
from .quad import QuadResult, QuadSpec, tanh_sinh

__all__ = [
    "FracParams",
    "alpha_n",
    "kernel_K",
    "kernel_H",
    "kernel_weight",
    "kernel_weight_closed_form",
    "sphere_surface_area",
]


@dataclass(frozen=True)
class FracParams:
    """Fractional order s and ambient dimension n.

    Operator evaluation needs 0 < s < 1; the pointwise condition
    checkers accept any real s (set ``operator_use=False`` there).
    The derived exponent gamma = n - 2s governs the critical power
    profile -r^(-gamma).
    """

    s: float
    n: int
    operator_use: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"dimension n={self.n} < 2")
        if self.operator_use and not 0.0 < self.s < 1.0:
            raise DomainError(
                f"s={self.s} outside (0,1); construct with operator_use=False "
                "for condition checks with general s")

    @property
    def gamma(self) -> float:
        return self.n - 2.0 * self.s


def alpha_n(n: int) -> float:
    """The dimensional constant pi^((n-3)/2) / Gamma((n-1)/2)."""
    if n < 2:
        raise DomainError(f"dimension n={n} < 2")
    return math.pi ** (0.5 * (n - 3)) / math.exp(log_gamma(0.5 * (n - 1)))


def sphere_surface_area(n: int) -> float:
    """Surface measure of the unit sphere in n dimensions."""
    if n < 2:
        raise DomainError(f"dimension n={n} < 2")
    return 2.0 * math.pi ** (0.5 * n) / math.exp(log_gamma(0.5 * n))


def kernel_K(p: FracParams, tau: float, spec: QuadSpec = QuadSpec()) -> float:
    """Angular kernel K(tau) = 2 pi alpha_n int_0^pi sin^(n-2)(theta)
    / (1 - 2 tau cos(theta) + tau^2)^((n+2s)/2) d(theta).

    Defined for tau >= 0 except tau = 1, where the integrand has a
    non-integrable singularity at theta = 0.
    """
    if tau < 0:
        raise DomainError(f"tau={tau} < 0")
    if tau == 1.0:
        raise SingularityError("K has a non-integrable singularity at tau=1")
    n, s = p.n, p.s
    expo = 0.5 * (n + 2.0 * s)
    tm1sq = (tau - 1.0) ** 2

    def integrand(theta: float) -> float:
        # 1 - 2 tau cos(theta) + tau^2 = (tau-1)^2 + 4 tau sin^2(theta/2),
        # a sum of nonnegative terms: no cancellation as tau -> 1
        denom = tm1sq + 4.0 * tau * math.sin(0.5 * theta) ** 2
        return math.sin(theta) ** (n - 2) * denom ** (-expo)

    res = tanh_sinh(integrand, 0.0, math.pi, spec)
    return 2.0 * math.pi * alpha_n(n) * res.value


def _h_integral(n: int, s: float, tau2m1: float,
                spec: QuadSpec) -> QuadResult:
    """The psi-integral of H with tau^2 - 1 supplied exactly.

    Split at psi = pi/2 and folded so both halves run over
    phi in (0, pi/2) with the delicate endpoint at 0 or reached
    through cancellation-free forms:

    * lower half (psi in [0, pi/2], phi = pi/2 - psi):
      sqrt(tau^2 - sin^2 psi) = sqrt(tau2m1 + sin^2 phi);
    * upper half (psi in [pi/2, pi], phi = pi - psi): the base
      sqrt(tau^2 - sin^2 psi) + cos(psi) nearly vanishes as tau -> 1,
      so it is computed as tau2m1 / (sqrt(...) + cos phi).
    """
    expo = 1.0 + 2.0 * s
    rt = math.sqrt(tau2m1)

    def lower(phi: float) -> float:
        # hypot keeps root positive even when sin^2(phi) would underflow
        root = math.hypot(rt, math.sin(phi))
        return math.cos(phi) ** (n - 2) * (root + math.sin(phi)) ** expo / root

    def upper(phi: float) -> float:
        c = math.cos(phi)
        root = math.hypot(rt, c)
        base = tau2m1 / (root + c)
        return math.sin(phi) ** (n - 2) * base ** expo / root

    return tanh_sinh(lower, 0.0, 0.5 * math.pi, spec) + \
        tanh_sinh(upper, 0.0, 0.5 * math.pi, spec)


def kernel_H(p: FracParams, tau: float, spec: QuadSpec = QuadSpec()) -> float:
    """Angular kernel H(tau) = 2 pi alpha_n int_0^pi sin^(n-2)(psi)
    (sqrt(tau^2 - sin^2 psi) + cos psi)^(1+2s) / sqrt(tau^2 - sin^2 psi)
    d(psi), finite and continuous on [1, infinity).
    """
    if tau < 1.0:
        raise DomainError(f"tau={tau} < 1")
    tau2m1 = (tau - 1.0) * (tau + 1.0)
    res = _h_integral(p.n, p.s, tau2m1, spec)
    return 2.0 * math.pi * alpha_n(p.n) * res.value


def kernel_h_at_one(p: FracParams) -> float:
    """Closed form H(1) = pi alpha_n 2^(1+2s) B((n-1)/2, s+1/2).

    On [0, pi/2] the integrand at tau=1 reduces to
    2^(1+2s) sin^(n-2) cos^(2s); the (pi/2, pi] half vanishes.
    """
    n, s = p.n, p.s
    log_beta = (log_gamma(0.5 * (n - 1)) + log_gamma(s + 0.5)
                - log_gamma(0.5 * n + s))
    return math.pi * alpha_n(n) * 2.0 ** (1.0 + 2.0 * s) * math.exp(log_beta)


@lru_cache(maxsize=4096)
def _weight_from_delta(n: int, s: float, delta: float,
                       spec: QuadSpec) -> float:
    """Weight tau (tau^2-1)^(-1-2s) H(tau) at tau = 1 + delta.

    delta is the primary variable so that tau^2 - 1 = delta (2 + delta)
    carries full relative accuracy arbitrarily close to the singular
    endpoint.  Close to tau = 1 the H-quadrature route is used (the
    hypergeometric argument 1/tau^2 sits too close to 1 there); farther
    out the closed form is cheaper and smooth.
    """
    if delta <= 0.0:
        raise DomainError(f"delta={delta} <= 0")
    tau = 1.0 + delta
    tau2m1 = delta * (2.0 + delta)
    if delta >= 0.05:
        return _weight_closed(n, s, tau, tau2m1)
    h_val = 2.0 * math.pi * alpha_n(n) * _h_integral(n, s, tau2m1, spec).value
    return tau * tau2m1 ** (-1.0 - 2.0 * s) * h_val


@lru_cache(maxsize=4096)
def _log_weight_from_delta(n: int, s: float, delta: float,
                           spec: QuadSpec) -> float:
    """log of the weight at tau = 1 + delta, finite for any delta > 0.

    The weight itself scales like delta^(-1-2s) and overflows double
    precision near the singular endpoint (delta ~ 1e-120 already does
    for s close to 1); quadrature integrands multiply it by a bracket
    of order delta^2 and must combine the exponents in log space.
    """
    if delta <= 0.0:
        raise DomainError(f"delta={delta} <= 0")
    tau = 1.0 + delta
    if delta >= 0.05:
        return math.log(_weight_closed(n, s, tau, tau * tau - 1.0))
    tau2m1 = delta * (2.0 + delta)
    h_val = 2.0 * math.pi * alpha_n(n) * _h_integral(n, s, tau2m1, spec).value
    return (math.log(tau) + math.log(h_val)
            - (1.0 + 2.0 * s) * (math.log(delta) + math.log1p(1.0 + delta)))


def _weight_closed(n: int, s: float, tau: float, tau2m1: float) -> float:
    """(2 pi^(n/2)/Gamma(n/2)) tau^(-1-2s) F((n+2s)/2, 1+s, n/2, 1/tau^2)."""
    x = 1.0 / (tau * tau)
    one_minus_x = tau2m1 * x  # (tau^2 - 1)/tau^2, cancellation-free
    params = HyperParams(0.5 * (n + 2.0 * s), 1.0 + s, 0.5 * n)
    fval = f21_with_complement(params, x, one_minus_x)
    return sphere_surface_area(n) * tau ** (-1.0 - 2.0 * s) * fval


def kernel_weight(p: FracParams, tau: float, spec: QuadSpec = QuadSpec(),
                  route: str = "hypergeometric") -> float:
    """The full radial weight tau (tau^2-1)^(-1-2s) H(tau), tau > 1.

    ``route`` selects the evaluation pathway: "hypergeometric" (the
    closed form, default), "quadrature" (through kernel_H, kept for
    cross-validation), or "auto" (quadrature near tau = 1 where the
    hypergeometric argument approaches 1, closed form elsewhere).
    """
    if tau <= 1.0:
        raise DomainError(f"tau={tau} <= 1")
    n, s = p.n, p.s
    tau2m1 = (tau - 1.0) * (tau + 1.0)
    if route == "hypergeometric":
        return _weight_closed(n, s, tau, tau2m1)
    if route == "quadrature":
        h_val = 2.0 * math.pi * alpha_n(n) * _h_integral(n, s, tau2m1, spec).value
        return tau * tau2m1 ** (-1.0 - 2.0 * s) * h_val
    if route == "auto":
        return _weight_from_delta(n, s, tau - 1.0, spec)
    raise ValueError(f"unknown route {route!r}")
