"""Pointwise criteria for radial s-subharmonicity and k-convexity.

Two equivalent conditions for C^2 radial profiles (any real s):

* cond-1, the two-scale bracket inequality
  u(r) - u(r tau) + (u(r) - u(r/tau)) tau^(-(n-2s)) <= 0;
* cond-2, the ODE form u''(r) + (n-2s+1) u'(r)/r >= 0.

k-convexity of a radial C^2 function is cond-2 at s = n(k-1)/(2k) + 1.
The module also provides the Mellin-convolution mollifier (which
preserves cond-1) and a grid-level maximum-principle check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, MissingDerivative, PreconditionError
from .fraclap import RadialProfile, bracket
from .kernel import FracParams

__all__ = [
    "ConditionGrid",
    "ConditionReport",
    "check_cond1",
    "check_cond2",
    "check_equivalence_1_7_vs_1_8",
    "check_kconvex_radial",
    "mellin_mollify",
    "check_max_principle",
    "kconvex_order_s",
]


def _default_r() -> tuple:
    return tuple(np.logspace(-3.0, 3.0, 64))


def _default_tau() -> tuple:
    return tuple(np.exp(np.linspace(1e-4, 10.0, 64)))


@dataclass(frozen=True)
class ConditionGrid:
    """Sample points: r log-spaced in [1e-3, 1e3], log(tau) linearly
    spaced in [1e-4, 10] by default."""

    r_values: Sequence[float] = field(default_factory=_default_r)
    tau_values: Sequence[float] = field(default_factory=_default_tau)

    def __post_init__(self):
        r = tuple(self.r_values)
        t = tuple(self.tau_values)
        if not r or not t:
            raise DomainError("grid must be non-empty")
        if any(x <= 0 for x in r) or list(r) != sorted(set(r)):
            raise DomainError("r_values must be positive and strictly increasing")
        if t[0] < 1.0 or list(t) != sorted(set(t)):
            raise DomainError("tau_values must be >= 1 and strictly increasing")
        object.__setattr__(self, "r_values", r)
        object.__setattr__(self, "tau_values", t)


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    worst_margin: float
    worst_location: Optional[tuple]
    samples_checked: int

    def agrees_with(self, other: "ConditionReport") -> bool:
        return self.holds == other.holds


def check_cond1(u: RadialProfile, p: FracParams,
                grid: ConditionGrid = ConditionGrid(),
                slack: float = 1e-12) -> ConditionReport:
    """The bracket inequality on the full (r, tau) grid.

    Margins are normalized by the local scale of u (the largest of the
    three profile values entering the bracket), so slack separates
    genuine sign violations from roundoff at any magnitude.  Holds iff
    the maximum normalized bracket is <= slack.
    """
    if slack < 0:
        raise DomainError("slack must be >= 0")
    gamma = p.gamma
    worst = -math.inf
    where = None
    count = 0
    for r in grid.r_values:
        ur = abs(u.value(r))
        for tau in grid.tau_values:
            val = bracket(u, p, r, tau)
            count += 1
            scale = max(ur, abs(u.value(r * tau)),
                        abs(u.value(r / tau)) * tau ** (-gamma), 1e-300)
            margin = val / scale
            if margin > worst:
                worst = margin
                where = (r, tau)
    return ConditionReport(worst <= slack, worst, where, count)


def check_cond2(u: RadialProfile, p: FracParams,
                r_values: Sequence[float] = _default_r(),
                slack: float = 1e-12) -> ConditionReport:
    """The ODE form u'' + (n - 2s + 1) u'/r >= 0 on the r grid.

    Margins are normalized by the local scale |u''| + |coef u'/r|, so
    an analytically zero combination (e.g. the harmonic power at k=1)
    holds at any r despite roundoff in the individual terms.  Holds iff
    the minimum normalized value is >= -slack.
    """
    if u.deriv1 is None or u.deriv2 is None:
        raise MissingDerivative("cond-2 needs deriv1 and deriv2")
    coef = p.n - 2.0 * p.s + 1.0
    worst = math.inf
    where = None
    count = 0
    for r in r_values:
        t1 = u.deriv2(r)
        t2 = coef * u.deriv1(r) / r
        scale = max(abs(t1) + abs(t2), 1e-300)
        margin = (t1 + t2) / scale
        count += 1
        if margin < worst:
            worst = margin
            where = (r,)
    return ConditionReport(worst >= -slack, worst, where, count)


def check_equivalence_1_7_vs_1_8(u: RadialProfile, p: FracParams,
                                 grid: ConditionGrid = ConditionGrid(),
                                 slack: float = 1e-12) -> ConditionReport:
    """Both criteria on matched grids; holds iff their outcomes agree."""
    rep1 = check_cond1(u, p, grid, slack)
    rep2 = check_cond2(u, p, grid.r_values, slack)
    agree = rep1.agrees_with(rep2)
    # on disagreement, report the magnitude of the violating side
    margin = 0.0 if agree else max(rep1.worst_margin, -rep2.worst_margin)
    where = None if agree else (rep1.worst_location if rep1.worst_margin > slack
                                else rep2.worst_location)
    return ConditionReport(agree, margin, where,
                           rep1.samples_checked + rep2.samples_checked)


def kconvex_order_s(k: int, n: int) -> float:
    """The s for which cond-2 coincides with radial k-convexity:
    n - 2s + 1 = (n - k)/k, i.e. s = n (k-1)/(2k) + 1."""
    if not 1 <= k <= n:
        raise DomainError(f"require 1 <= k <= n, got k={k}, n={n}")
    return n * (k - 1) / (2.0 * k) + 1.0


def check_kconvex_radial(u: RadialProfile, k: int, n: int,
                         r_values: Sequence[float] = _default_r(),
                         slack: float = 1e-12) -> ConditionReport:
    """Radial k-convexity u'' + ((n-k)/k) u'/r >= 0 on the r grid."""
    s = kconvex_order_s(k, n)
    p = FracParams(s, n, operator_use=False)
    return check_cond2(u, p, r_values, slack)


@lru_cache(maxsize=32)
def _bump_rule(bump_radius: float, order: int = 48):
    """Gauss-Legendre discretization of the normalized smooth bump
    exp(-1/(1 - (y/R)^2)) on (-R, R); weights sum to exactly 1."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    y = nodes * bump_radius
    w = weights * bump_radius * np.exp(-1.0 / (1.0 - (y / bump_radius) ** 2))
    w /= w.sum()
    return y, w


def mellin_mollify(u: RadialProfile, epsilon: float,
                   bump_radius: float = 1.0) -> RadialProfile:
    """Mellin-convolution smoothing u_eps(r) = int phi(y) u(r e^(-eps y)) dy
    with a mass-one smooth bump phi supported in [-bump_radius, bump_radius].

    Constants are exact fixed points (the discrete weights sum to 1);
    pure powers r^p are fixed up to a positive multiplier.
    """
    if epsilon <= 0 or bump_radius <= 0:
        raise DomainError("epsilon and bump_radius must be positive")
    y, w = _bump_rule(bump_radius)
    factors = np.exp(-epsilon * y)

    def value(r: float) -> float:
        return float(sum(wi * u.value(r * fi) for wi, fi in zip(w, factors)))

    return RadialProfile(value=value, decay_class=u.decay_class,
                         name=f"mollified({u.name}, eps={epsilon})")


def check_max_principle(u: RadialProfile, p: FracParams,
                        grid: ConditionGrid = ConditionGrid(),
                        slack: float = 1e-12) -> ConditionReport:
    """Grid-level maximum principle: under cond-1, u is either constant
    or has no strict interior maximizer against its tau-translates.

    Raises PreconditionError when cond-1 fails on the grid.
    """
    pre = check_cond1(u, p, grid, slack)
    if not pre.holds:
        raise PreconditionError(
            f"cond-1 fails on the grid (worst margin {pre.worst_margin:.3g} "
            f"at {pre.worst_location})")
    values = [u.value(r) for r in grid.r_values]
    scale = max(abs(v) for v in values) or 1.0
    if max(values) - min(values) <= slack * scale:
        return ConditionReport(True, 0.0, None, len(values))
    worst = -math.inf
    where = None
    count = 0
    for r, ur in zip(grid.r_values, values):
        neighbor_max = -math.inf
        for tau in grid.tau_values:
            if tau <= 1.0:
                continue
            neighbor_max = max(neighbor_max, u.value(r * tau), u.value(r / tau))
        count += 1
        excess = ur - neighbor_max  # > slack would be a strict interior max
        if excess > worst:
            worst = excess
            where = (r,)
    return ConditionReport(worst <= slack, worst, where, count)
