"""Gauss hypergeometric engine: evaluation routes and sanity identities.

Run: python3 demos/01_hypergeometric_engine.py
"""

import math

from radlap import HyperParams, f21, f21_at_one, f21_derivative
from radlap.hypergeom import f21_euler_integral, f21_pfaff

p = HyperParams(0.5, 1.0, 1.5)

print("F(1/2, 1, 3/2, x^2) should equal atanh(x)/x:")
for x in (0.2, 0.5, 0.9):
    approx = f21(p, x * x)
    exact = math.atanh(x) / x
    print(f"  x={x:.1f}   engine={approx:.15f}   atanh={exact:.15f}")

print("\nThree independent routes at a generic point:")
q = HyperParams(1.3, 0.8, 2.1)
x = -0.65
print(f"  series/Pfaff core : {f21(q, x):.15f}")
print(f"  Pfaff transform   : {f21_pfaff(q, x):.15f}")
print(f"  Euler integral    : {f21_euler_integral(q, x):.15f}")

print("\nBehavior at the boundary x = 1 (Gauss summation):")
g = HyperParams(-0.5, 0.5, 2.0)
print(f"  F(-1/2, 1/2, 2, 1) = {f21_at_one(g):.15f}")
print(f"  8 / (3 pi)         = {8.0 / (3.0 * math.pi):.15f}")
for eps in (1e-2, 1e-4, 1e-6):
    print(f"  F at 1-{eps:.0e}: {f21(g, 1.0 - eps):.15f}")

print("\nDerivative rule dF/dx = (ab/c) F(a+1,b+1,c+1,x):")
h = 1e-6
fd = (f21(q, x + h) - f21(q, x - h)) / (2.0 * h)
print(f"  analytic : {f21_derivative(q, x):.12f}")
print(f"  centered : {fd:.12f}")
