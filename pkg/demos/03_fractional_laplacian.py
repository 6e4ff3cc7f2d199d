"""The fractional Laplacian of radial profiles.

Highlights the exact equality case (the critical power -r^(2s-n) is
annihilated bracket-by-bracket), a closed-form cross-check, and the
derivative rule.

Run: python3 demos/03_fractional_laplacian.py
"""

import math

from radlap import (
    FracParams,
    fbeta_profile,
    fraclap_derivative,
    fraclap_radial,
    fraclap_radial_report,
    make_case,
    power_profile,
)
from radlap.fraclap import fbeta_fraclap_closed_form

p = FracParams(0.5, 3)
u = fbeta_profile(2.0)

print("(-Delta)^(1/2) of -(1+r^2)^(-1) in n=3 at r=1 is -pi^2/2:")
rep = fraclap_radial_report(u, p, 1.0)
print(f"  value = {rep.value:.15f}   (-pi^2/2 = {-0.5 * math.pi ** 2:.15f})")
print(f"  error estimate = {rep.error_estimate:.2e}, "
      f"converged = {rep.converged}")

print("\nEquality case: the critical power -r^(-(n-2s)) gives exactly 0:")
for n, s in ((3, 0.5), (5, 0.75)):
    q = FracParams(s, n)
    val = fraclap_radial(power_profile(q.gamma), q, 1.7)
    print(f"  n={n}, s={s}: {val!r}")

print("\nHypergeometric closed form vs direct quadrature (k=2, n=5):")
case = make_case(2, 5)
v = fbeta_profile(float(case.beta))
q = FracParams(float(case.s), case.n)
for r in (0.5, 1.0, 3.0):
    direct = -fraclap_radial(v, q, r)
    closed = fbeta_fraclap_closed_form(case, r)
    print(f"  r={r:3.1f}   direct={direct:.12f}   closed={closed:.12f}")

print("\nDerivative rule (1/r)(-Delta)^s[-2su + ru'] vs finite differences:")
h = 1e-3
for r in (0.5, 2.0):
    fd = (fraclap_radial(u, p, r + h) - fraclap_radial(u, p, r - h)) / (2 * h)
    print(f"  r={r:3.1f}   rule={fraclap_derivative(u, p, r):.10f}"
          f"   fd={fd:.10f}")
