"""Pointwise criteria for radial s-subharmonicity and k-convexity.

The two-scale bracket inequality (cond-1) and the ODE form (cond-2)
are equivalent for C^2 radial profiles at any real order s; the family
f_beta = -(1+r^2)^(-beta/2) switches from passing to failing exactly at
beta = n - 2s.

Run: python3 demos/04_subharmonicity_checks.py
"""

from radlap import (
    ConditionGrid,
    FracParams,
    check_cond1,
    check_cond2,
    check_kconvex_radial,
    fbeta_profile,
    mellin_mollify,
    power_profile,
)

p = FracParams(0.6, 4)
gamma = p.gamma
grid = ConditionGrid()

print(f"n={p.n}, s={p.s}: critical exponent n-2s = {gamma}")
for beta in (0.5 * gamma, gamma, gamma + 0.3):
    u = fbeta_profile(beta)
    r1 = check_cond1(u, p, grid)
    r2 = check_cond2(u, p, grid.r_values)
    verdict = "subharmonic" if r1.holds else "NOT subharmonic"
    print(f"  beta={beta:5.2f}: cond1={r1.holds!s:5}  cond2={r2.holds!s:5}"
          f"  -> {verdict} (worst margin {r1.worst_margin:+.2e})")

print("\nOrders above 1 are allowed for the pointwise checks:")
ps = FracParams(1.4, 4, operator_use=False)
u = fbeta_profile(1.0)
print(f"  s=1.4, beta=1: cond1 holds = {check_cond1(u, ps, grid).holds}")

print("\nRadial k-convexity is cond-2 at s = n(k-1)/(2k) + 1;")
print("the harmonic power -r^(2-n) sits exactly on the k=1 boundary:")
for n in (3, 5):
    rep = check_kconvex_radial(power_profile(n - 2.0), 1, n)
    print(f"  n={n}: holds={rep.holds}, worst margin {rep.worst_margin:+.1e}")

print("\nMellin mollification preserves cond-1:")
u = fbeta_profile(0.7 * gamma)
for eps in (0.1, 0.01):
    um = mellin_mollify(u, eps)
    print(f"  eps={eps:4.2f}: mollified cond1 holds ="
          f" {check_cond1(um, p, grid, slack=1e-10).holds}")
