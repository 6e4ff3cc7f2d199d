"""The iterated-operator inequality chain with exact rational constants.

For beta = n/k - 2 and s = k/(k+1), positivity of the iterated operator
(-Delta)^s[-(-Delta)^s f_beta]^k reduces to f(t) >= g(t) on [0,1] for a
hypergeometric ratio f and an algebraic bound g; the tangent argument
at t = 1 (f convex, g concave, equal values, ordered slopes) closes it.

Run: python3 demos/05_hessian_inequality_chain.py
"""

from radlap import (
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
from radlap.errors import InfiniteDerivative

case = make_case(2, 5)
print(f"k=2, n=5: alpha={case.alpha}, beta={case.beta}, s={case.s}")
print(f"  a={case.a}, b={case.b}, c={case.c}")
print(f"  d1={case.d1}, d2={case.d2}, d3={case.d3}")
print(f"  exact: d1^2 + d3 == (2c-b)^2 ->"
      f" {case.d1 ** 2 + case.d3 == (2 * case.c - case.b) ** 2}")

print("\nTangent data at t = 1:")
rep = tangent_report(case)
print(f"  f(1) = g(1) = a/c = {case.a / case.c}")
print(f"  f'(1) = {f_prime_at_1(case)}   g'(1) = {g_prime_at_1(case)}")
print(f"  chain closes (f'(1) <= g'(1)): {rep.chain_ok}")

print("\nSampling f and g on [0, 1] (f stays above g):")
for t in (0.0, 0.25, 0.5, 0.75, 0.95, 1.0):
    f, g = ratio_f(case, t), bound_g(case, t)
    print(f"  t={t:4.2f}   f={f:.10f}   g={g:.10f}   f-g={f - g:+.2e}")

print("\nFull verification stack:")
print(f"  g concave          : {check_g_concavity(case).holds}")
print(f"  f log-convex       : {check_log_convexity(case).holds}")
print(f"  f >= g on [0,1]    : {check_fg_inequality(case).holds}")
print(f"  iterated condition : {check_iterated_condition(case).holds}")

print("\nk = 1 is excluded from this route (the slope at 1 is infinite):")
try:
    f_prime_at_1(make_case(1, 3))
except InfiniteDerivative as exc:
    print(f"  InfiniteDerivative: {exc}")
