"""Gauss hypergeometric function 2F1 and the identities built on it.

Evaluation strategy (see :func:`f21`):

* power series with compensated summation for |x| <= 1/2;
* Pfaff transformation for x < -1/2, which maps the argument into
  (0, 1);
* Euler integral representation (when c > b > 0, or c > a > 0 by
  symmetry) for arguments in (1/2, 1), also exposed separately as an
  independent oracle;
* Gauss's closed form at x = 1 when c > a + b.

Internally every pathway threads the complement 1-x alongside x, so
arguments that approach 1 (e.g. produced by Pfaff from very negative x)
never go through a catastrophic 1-x subtraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, NonConvergence, PoleError
from .quad import QuadSpec, tanh_sinh

__all__ = [
    "HyperParams",
    "EvalPolicy",
    "DEFAULT_POLICY",
    "f21",
    "f21_with_complement",
    "f21_at_one",
    "f21_euler_integral",
    "f21_pfaff",
    "f21_derivative",
    "log_gamma",
    "gamma",
]


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


@dataclass(frozen=True)
class HyperParams:
    """The parameter triple (a, b, c) of 2F1."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if _is_nonpositive_integer(self.c):
            raise DomainError(f"c={self.c} is zero or a negative integer")

    def shifted(self, da: float, db: float, dc: float) -> "HyperParams":
        return HyperParams(self.a + da, self.b + db, self.c + dc)


@dataclass(frozen=True)
class EvalPolicy:
    series_tol: float = 1e-16
    max_terms: int = 200_000
    quad_spec: QuadSpec = field(default_factory=QuadSpec)

    def __post_init__(self):
        if self.series_tol <= 0:
            raise ValueError("series_tol must be positive")
        if self.max_terms < 8:
            raise ValueError("max_terms must be >= 8")


DEFAULT_POLICY = EvalPolicy()


# Lanczos approximation, g = 7, 9 terms (Godfrey's coefficients).
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0 via the Lanczos approximation."""
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    z = x - 1.0
    acc = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def gamma(x: float) -> float:
    """Gamma(x) for real non-pole x, extended to x < 0 by reflection."""
    if x > 0:
        return math.exp(log_gamma(x))
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma pole at x={x}")
    # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return math.pi / (math.sin(math.pi * x) * math.exp(log_gamma(1.0 - x)))


def _series(a: float, b: float, c: float, x: float,
            tol: float, max_terms: int) -> float:
    """Power series sum_k (a)_k (b)_k / ((c)_k k!) x^k, Kahan-compensated."""
    total = 1.0
    comp = 0.0
    term = 1.0
    small_streak = 0
    for k in range(max_terms):
        term *= (a + k) * (b + k) / ((c + k) * (1.0 + k)) * x
        if term == 0.0:  # a or b hit a nonpositive integer: polynomial case
            return total + comp
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) <= tol * max(abs(total), 1e-300):
            small_streak += 1
            if small_streak >= 2:
                return total + comp
        else:
            small_streak = 0
    raise NonConvergence(
        f"2F1 series did not converge in {max_terms} terms "
        f"(a={a}, b={b}, c={c}, x={x})")


def f21_at_one(p: HyperParams) -> float:
    """Gauss's formula: F(a,b,c,1) = G(c)G(c-a-b) / (G(c-a)G(c-b))."""
    a, b, c = p.a, p.b, p.c
    if c <= a + b:
        raise DomainError(f"Gauss formula needs c > a + b (c-a-b={c - a - b})")
    for arg in (c - a, c - b):
        if _is_nonpositive_integer(arg):
            raise PoleError(f"Gamma pole in denominator argument {arg}")
    return gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b))


def _euler_core(a: float, b: float, c: float, x: float, omx: float,
                spec: QuadSpec) -> float:
    """Euler integral for c > b > 0, split at 1/2 so both singular
    endpoints sit at 0 in their own integration variable (exact offsets).

    ``omx`` is 1 - x, supplied by the caller so that the factor
    1 - s x = (1-x) + (1-s) x can be formed without cancellation when
    x is close to 1.
    """

    def lower(s: float) -> float:
        # s in (0, 1/2]; 1 - s x computed directly is safe here
        return s ** (b - 1.0) * (1.0 - s) ** (c - b - 1.0) * (1.0 - s * x) ** (-a)

    def upper(u: float) -> float:
        # u = 1 - s in (0, 1/2]; 1 - s x = omx + u x
        return (1.0 - u) ** (b - 1.0) * u ** (c - b - 1.0) * (omx + u * x) ** (-a)

    lo = tanh_sinh(lower, 0.0, 0.5, spec)
    hi = tanh_sinh(upper, 0.0, 0.5, spec)
    norm = math.exp(log_gamma(c) - log_gamma(b) - log_gamma(c - b))
    return norm * (lo.value + hi.value)


def f21_euler_integral(p: HyperParams, x: float,
                       spec: QuadSpec = QuadSpec()) -> float:
    """Euler's integral representation, valid for c > b > 0 and x < 1.

    Serves as an independent oracle against the series/Pfaff pathway.
    """
    a, b, c = p.a, p.b, p.c
    if not (c > b > 0):
        raise DomainError(f"Euler integral needs c > b > 0 (b={b}, c={c})")
    if x >= 1:
        raise DomainError(f"Euler integral needs x < 1, got {x}")
    return _euler_core(a, b, c, x, 1.0 - x, spec)


def _f21_upper(a: float, b: float, c: float, x: float, omx: float,
               policy: EvalPolicy) -> float:
    """F for x in (1/2, 1): Euler integral if available, otherwise the
    Euler transformation F = (1-x)^(c-a-b) F(c-a, c-b, c, x), whose
    series converges absolutely up to x = 1, with a boosted term cap."""
    if c > b > 0:
        return _euler_core(a, b, c, x, omx, policy.quad_spec)
    if c > a > 0:  # symmetry of F in (a, b)
        return _euler_core(b, a, c, x, omx, policy.quad_spec)
    cap = policy.max_terms
    if 0.0 < x < 1.0:
        # terms decay like x^k times an algebraic factor
        cap = max(cap, min(8 * int(-41.5 / math.log(x)) + 64, 4_000_000))
    if a + b - c > 0:
        return omx ** (c - a - b) * _series(c - a, c - b, c, x,
                                            policy.series_tol, cap)
    return _series(a, b, c, x, policy.series_tol, cap)


def _f21_core(a: float, b: float, c: float, x: float, omx: float,
              policy: EvalPolicy) -> float:
    if x > 1:
        raise DomainError(f"2F1 argument {x} > 1 is outside the cut domain")
    if x == 1.0 or omx == 0.0:
        return f21_at_one(HyperParams(a, b, c))
    if _is_nonpositive_integer(a) or _is_nonpositive_integer(b):
        # terminating series: valid for every x
        return _series(a, b, c, x, policy.series_tol, policy.max_terms)
    if abs(x) <= 0.5:
        return _series(a, b, c, x, policy.series_tol, policy.max_terms)
    if x > 0.5:
        return _f21_upper(a, b, c, x, omx, policy)
    # x < -1/2: Pfaff maps to y = x/(x-1) in (1/3, 1); 1-y = 1/(1-x) exactly
    omy = 1.0 / omx
    y = -x * omy
    pref = omx ** (-b)
    if y <= 0.5:
        return pref * _series(c - a, b, c, y, policy.series_tol,
                              policy.max_terms)
    return pref * _f21_upper(c - a, b, c, y, omy, policy)


def f21(p: HyperParams, x: float, policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Evaluate F(a, b, c, x) for real x < 1, or x = 1 when c > a + b."""
    # 1-x is exact for x in [1/2, 2]; elsewhere its rounding is harmless
    return _f21_core(p.a, p.b, p.c, x, 1.0 - x, policy)


def f21_with_complement(p: HyperParams, x: float, one_minus_x: float,
                        policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Like :func:`f21` but with 1-x supplied by the caller.

    Use when x was computed from another variable and is close to 1, so
    the complement is known to more relative accuracy than 1-x would be.
    """
    return _f21_core(p.a, p.b, p.c, x, one_minus_x, policy)


def f21_pfaff(p: HyperParams, y: float,
              policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """Pfaff's transformation: (1-y)^(-b) F(c-a, b, c, y/(y-1)).

    By the identity this equals F(a, b, c, y); evaluating the right-hand
    side provides a cross-check of the direct pathway.
    """
    if y >= 1:
        raise DomainError(f"Pfaff transformation needs y < 1, got {y}")
    omy = 1.0 - y
    z = -y / omy
    return omy ** (-p.b) * _f21_core(p.c - p.a, p.b, p.c, z, 1.0 / omy, policy)


def f21_derivative(p: HyperParams, x: float,
                   policy: EvalPolicy = DEFAULT_POLICY) -> float:
    """dF/dx = (a b / c) F(a+1, b+1, c+1, x)."""
    if x >= 1:
        raise DomainError(f"derivative formula needs x < 1, got {x}")
    if p.a == 0.0 or p.b == 0.0:
        return 0.0
    return p.a * p.b / p.c * f21(p.shifted(1, 1, 1), x, policy)
