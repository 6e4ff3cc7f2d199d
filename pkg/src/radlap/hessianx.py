"""Verification pipeline for the iterated fractional Laplacian condition.

For the extremal profiles f_beta with beta = n/k - 2 and order
s = k/(k+1), the condition (-Delta)^s[-(-Delta)^s f_beta]^k >= 0
reduces to a chain of hypergeometric inequalities: with
phi(r) = C F(a,b,c,-r^2),

    phi'' + (k-1) phi'^2/phi + ((n - alpha + 1)/r) phi' <= 0,

which in turn follows from f(t) >= g(t) on [0,1], where f is the
Gaussian ratio F(c-a,b,c,t)/F(c-a,b+1,c+1,t) and g an explicit
algebraic bound.  The tangent argument closes it: f convex, g concave,
f(1) = g(1) = a/c, and f'(1) <= g'(1).

Case constants are exact rationals, so the construction-layer
identities hold with no tolerance at all.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, InfiniteDerivative, PreconditionError
from .hypergeom import (
    DEFAULT_POLICY,
    EvalPolicy,
    HyperParams,
    f21,
    f21_at_one,
    f21_derivative,
)
from .subharm import ConditionReport

__all__ = [
    "HessianCase",
    "TangentReport",
    "make_case",
    "ratio_f",
    "bound_g",
    "f_prime_at_1",
    "g_prime_at_1",
    "tangent_report",
    "check_g_concavity",
    "check_fg_inequality",
    "check_log_convexity",
    "check_iterated_condition",
]


@dataclass(frozen=True)
class HessianCase:
    """The pair (k, n) with its derived constants, all exact rationals:

    alpha = 2k/(k+1), beta = n/k - 2, s = k/(k+1) = alpha/2,
    a = (n+alpha)/2, b = (alpha+beta)/2, c = n/2,
    d1 = 2a+b-2c, d2 = c-a+1, d3 = 4a(2c-a-b).

    beta = 0 (n = 2k) makes f_beta constant; the case is accepted but
    flagged ``degenerate`` and the inequality chain is not asserted.
    """

    k: int
    n: int
    alpha: Fraction
    beta: Fraction
    s: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    d1: Fraction
    d2: Fraction
    d3: Fraction

    @property
    def degenerate(self) -> bool:
        return self.beta == 0

    def hyper_params(self) -> HyperParams:
        return HyperParams(float(self.a), float(self.b), float(self.c))


def make_case(k: int, n: int) -> HessianCase:
    """Build the case and assert every construction identity exactly."""
    if k < 1:
        raise DomainError(f"k={k} < 1")
    if n < 2 * k:
        raise DomainError(f"n={n} < 2k={2 * k}")
    alpha = Fraction(2 * k, k + 1)
    beta = Fraction(n, k) - 2
    s = Fraction(k, k + 1)
    a = (n + alpha) / 2
    b = (alpha + beta) / 2
    c = Fraction(n, 2)
    d1 = 2 * a + b - 2 * c
    d2 = c - a + 1
    d3 = 4 * a * (2 * c - a - b)
    case = HessianCase(k, n, alpha, beta, s, a, b, c, d1, d2, d3)
    assert a > c > b >= 0 and (beta == 0 or b > 0)
    assert d1 * d1 + d3 == (2 * c - b) ** 2
    assert d3 == 4 * a * b * (k - 1)
    if k >= 2:
        assert a > b + 1
        assert c - b - 1 > 0
    else:
        assert a == b + 1
    assert d3 - 4 * d2 * (d1 + d2) == 4 * (c + 1) * (c - b - 1)
    return case


def ratio_f(case: HessianCase, t: float,
            policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """The Gaussian ratio f(t) = F(c-a,b,c,t) / F(c-a,b+1,c+1,t), t <= 1."""
    if t > 1:
        raise DomainError(f"t={t} > 1")
    ca = float(case.c - case.a)
    b = float(case.b)
    c = float(case.c)
    num_p = HyperParams(ca, b, c)
    den_p = HyperParams(ca, b + 1.0, c + 1.0)
    if t == 1.0:
        return f21_at_one(num_p) / f21_at_one(den_p)
    return f21(num_p, t, policy) / f21(den_p, t, policy)


def bound_g(case: HessianCase, t: float) -> float:
    """g(t) = (d1 t - d2(1-t) + sqrt((d1 t - d2(1-t))^2 + d3 t)) / (2c)."""
    if t < 0:
        raise DomainError(f"t={t} < 0")
    d1, d2, d3, c = (float(case.d1), float(case.d2), float(case.d3),
                     float(case.c))
    lin = d1 * t - d2 * (1.0 - t)
    return (lin + math.sqrt(lin * lin + d3 * t)) / (2.0 * c)


def f_prime_at_1(case: HessianCase) -> Fraction:
    """Closed form f'(1) = a(a-c) / (c(a-b-1)); infinite at k = 1."""
    if case.k == 1:
        raise InfiniteDerivative("f'(1) is +infinity at k=1 (a = b+1)")
    return case.a * (case.a - case.c) / (case.c * (case.a - case.b - 1))


def g_prime_at_1(case: HessianCase) -> Fraction:
    """Closed form g'(1) = a(c+1) / (c(2c-b))."""
    return case.a * (case.c + 1) / (case.c * (2 * case.c - case.b))


@dataclass(frozen=True)
class TangentReport:
    f_at_1: float
    g_at_1: float
    f_prime_1: float
    g_prime_1: float
    chain_ok: bool


def tangent_report(case: HessianCase, tol: float = 1e-12) -> TangentReport:
    """The four tangent quantities at t = 1 and whether the comparison
    argument (equal values, ordered slopes) closes."""
    if case.k == 1:
        raise InfiniteDerivative("the tangent route needs k >= 2")
    value = float(case.a / case.c)
    fp = float(f_prime_at_1(case))
    gp = float(g_prime_at_1(case))
    return TangentReport(value, value, fp, gp, fp <= gp + tol)


def check_g_concavity(case: HessianCase, slack: float = 1e-10,
                      t_grid: Optional[Sequence[float]] = None) -> ConditionReport:
    """Concavity of g on [0, inf): the radicand's discriminant structure
    d3 (d3 - 4 d2 (d1 + d2)) >= 0 checked exactly (the second factor
    equals 4(c+1)(c-b-1)), plus numerical second differences on a grid."""
    if case.k == 1:
        raise PreconditionError("k=1 is excluded from the concavity check")
    disc = case.d3 * (case.d3 - 4 * case.d2 * (case.d1 + case.d2))
    exact_ok = disc >= 0
    if t_grid is None:
        t_grid = [0.1 * j for j in range(51)]
    worst = -math.inf
    where = None
    for i in range(1, len(t_grid) - 1):
        h1 = t_grid[i] - t_grid[i - 1]
        h2 = t_grid[i + 1] - t_grid[i]
        second = (bound_g(case, t_grid[i + 1]) - 2.0 * bound_g(case, t_grid[i])
                  + bound_g(case, t_grid[i - 1])) / (0.5 * (h1 + h2)) ** 2
        if second > worst:
            worst = second
            where = (t_grid[i],)
    holds = exact_ok and worst <= slack
    return ConditionReport(holds, worst, where, len(t_grid) - 2)


def _fg_default_grid() -> list:
    """200 points in [0, 1], uniform plus geometric clustering at 1."""
    grid = [j / 160.0 for j in range(160)]
    grid += [1.0 - 10.0 ** (-0.15 * j - 1.0) for j in range(39)]
    grid.append(1.0)
    return sorted(set(grid))


def check_fg_inequality(case: HessianCase,
                        t_grid: Optional[Sequence[float]] = None,
                        policy: EvalPolicy = DEFAULT_POLICY,
                        slack: float = 1e-9) -> ConditionReport:
    """f(t) >= g(t) on [0, 1], plus the tangent consequences
    f(t) >= f(1) + (t-1) f'(1) and g(t) <= g(1) + (t-1) g'(1)."""
    if case.k < 2:
        raise PreconditionError("the f/g route needs k >= 2")
    if t_grid is None:
        t_grid = _fg_default_grid()
    v1 = float(case.a / case.c)
    fp = float(f_prime_at_1(case))
    gp = float(g_prime_at_1(case))
    worst = math.inf
    where = None
    ok = True
    for t in t_grid:
        fv = ratio_f(case, t, policy)
        gv = bound_g(case, t)
        margin = fv - gv
        if margin < worst:
            worst = margin
            where = (t,)
        if margin < -slack:
            ok = False
        if fv < v1 + (t - 1.0) * fp - slack:  # f above its tangent at 1
            ok = False
        if gv > v1 + (t - 1.0) * gp + slack:  # g below its tangent at 1
            ok = False
    return ConditionReport(ok, worst, where, len(t_grid))


def check_log_convexity(case: HessianCase,
                        t_grid: Optional[Sequence[float]] = None,
                        policy: EvalPolicy = DEFAULT_POLICY,
                        slack: float = 1e-9) -> ConditionReport:
    """Log-convexity of the Gaussian ratio f on (-inf, 1).

    Requires the first ratio parameter c - a = -alpha/2 in (-1, 0) and
    c > b > 0.  Checks second differences of log f on the grid, the
    convexity of the companion ratio (1+x) f(x/(x+1)), and the two
    monotonicity cross-products f1' f2 - f2' f1 > 0 at sample points.
    """
    ca = case.c - case.a
    if not -1 < ca < 0:
        raise PreconditionError(f"first parameter c-a={ca} outside (-1,0)")
    if not case.c > case.b > 0:
        raise PreconditionError("needs c > b > 0")
    if t_grid is None:
        t_grid = [-5.0 + 5.99 * j / 120.0 for j in range(121)]
    worst = math.inf
    where = None
    logf = [math.log(ratio_f(case, t, policy)) for t in t_grid]
    for i in range(1, len(t_grid) - 1):
        h = 0.5 * (t_grid[i + 1] - t_grid[i - 1])
        second = (logf[i + 1] - 2.0 * logf[i] + logf[i - 1]) / (h * h)
        if second < worst:
            worst = second
            where = (t_grid[i],)
    ok = worst >= -slack

    def companion(x: float) -> float:
        return (1.0 + x) * ratio_f(case, x / (x + 1.0), policy)

    xs = [-0.9 + 10.9 * j / 40.0 for j in range(41)]
    comp = [companion(x) for x in xs]
    for i in range(1, len(xs) - 1):
        h = 0.5 * (xs[i + 1] - xs[i - 1])
        second = (comp[i + 1] - 2.0 * comp[i] + comp[i - 1]) / (h * h)
        if second < -slack:
            ok = False

    # cross-products of the numerator/denominator pair
    num_p = HyperParams(float(ca), float(case.b), float(case.c))
    den_p = HyperParams(float(ca), float(case.b) + 1.0, float(case.c) + 1.0)
    for j in range(20):
        x = -2.0 + 2.95 * j / 19.0
        f1 = f21(num_p, x, policy)
        f2 = f21(den_p, x, policy)
        f1p = f21_derivative(num_p, x, policy)
        f2p = f21_derivative(den_p, x, policy)
        if f1p * f2 - f2p * f1 <= 0.0:
            ok = False
    return ConditionReport(ok, worst, where, len(t_grid))


def _phi_terms(case: HessianCase, r: float, policy: EvalPolicy):
    """F, F', F'' of F(a,b,c,.) evaluated at -r^2, derivatives via two
    applications of the differentiation formula."""
    p = case.hyper_params()
    x = -r * r
    fv = f21(p, x, policy)
    fp = f21_derivative(p, x, policy)
    p1 = p.shifted(1, 1, 1)
    fpp = (p.a * p.b / p.c) * f21_derivative(p1, x, policy)
    return fv, fp, fpp


def check_iterated_condition(case: HessianCase,
                             r_grid: Optional[Sequence[float]] = None,
                             policy: EvalPolicy = DEFAULT_POLICY,
                             slack: float = 1e-8,
                             rng_seed: int = 20260823) -> ConditionReport:
    """Both certification routes for the iterated condition:

    (A) the direct radial inequality evaluated from F and its first two
        derivatives on the r grid, normalized by the sum of the term
        magnitudes;
    (B) the reduced comparison f >= g (check_fg_inequality);

    plus a cross-check that the quadratic in lambda = F'(-x)/F(-x)
    agrees in sign with route (A) at random radii.  Degenerate cases
    (beta = 0, constant profile) hold vacuously.
    """
    if case.k < 2:
        raise PreconditionError(
            "k=1 is certified by the superposition identity, not this route")
    if case.degenerate:
        return ConditionReport(True, 0.0, None, 0)
    if r_grid is None:
        r_grid = [10.0 ** (-2.0 + 4.0 * j / 63.0) for j in range(64)]
    k, n = case.k, case.n
    alpha = float(case.alpha)
    a, b, c = (float(case.a), float(case.b), float(case.c))
    worst = -math.inf
    where = None
    ok = True
    for r in r_grid:
        fv, fp, fpp = _phi_terms(case, r, policy)
        x = r * r
        t1 = 4.0 * x * fpp
        t2 = 4.0 * (k - 1) * x * fp * fp / fv
        t3 = -2.0 * (n - alpha + 2.0) * fp
        scale = abs(t1) + abs(t2) + abs(t3)
        margin = (t1 + t2 + t3) / scale
        if margin > worst:
            worst = margin
            where = (r,)
        if margin > slack:
            ok = False
    # lambda-quadratic cross-check at random radii: by the hypergeometric
    # equation the direct expression equals 4 F/(1+x) times the quadratic
    # in lambda = F'(-x)/F(-x), so both sign and ratio must agree
    rng = random.Random(rng_seed)
    for _ in range(10):
        r = 10.0 ** rng.uniform(-2.0, 2.0)
        fv, fp, fpp = _phi_terms(case, r, policy)
        x = r * r
        lam = fp / fv
        quad = (x * (1.0 + x) * (k - 1) * lam * lam
                + ((2.0 * a + b - 2.0 * c) * x + a - c - 1.0) * lam
                - a * b)
        direct = (4.0 * x * fpp + 4.0 * (k - 1) * x * fp * fp / fv
                  - 2.0 * (n - alpha + 2.0) * fp)
        if quad > slack * (abs(a * b) + abs(lam)):
            ok = False
        if abs(direct - 4.0 * fv / (1.0 + x) * quad) > slack * abs(direct):
            ok = False
    rep_b = check_fg_inequality(case, policy=policy)
    holds = ok and rep_b.holds
    return ConditionReport(holds, worst, where, len(r_grid) + rep_b.samples_checked)
