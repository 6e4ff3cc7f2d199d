"""Angular kernels H and K of the radial representation.

H is the desingularized companion of K: K blows up at tau = 1 while H
stays finite and continuous there, which is what makes the radial
weight tau (tau^2-1)^(-1-2s) H(tau) tractable near the singularity.

Run: python3 demos/02_angular_kernels.py
"""

import math

from radlap import FracParams, kernel_H, kernel_K, kernel_h_at_one, kernel_weight
from radlap.kernel import sphere_surface_area

p = FracParams(0.5, 3)

print("n=3, s=1/2: H(tau) = 4 pi tau in closed form")
for tau in (1.0, 1.5, 2.0, 5.0):
    print(f"  tau={tau:4.1f}   H={kernel_H(p, tau):12.8f}"
          f"   4 pi tau={4.0 * math.pi * tau:12.8f}")

print(f"\nH(1) via the Beta closed form: {kernel_h_at_one(p):.12f}"
      f"  (4 pi = {4.0 * math.pi:.12f})")

q = FracParams(0.3, 4)
print(f"\nK(0) recovers the sphere area in n=4:"
      f" {kernel_K(q, 0.0):.12f} vs {sphere_surface_area(4):.12f}")

print("\nInversion symmetry K(1/xi) = xi^(n+2s) K(xi):")
for xi in (0.4, 0.7):
    lhs = kernel_K(q, 1.0 / xi)
    rhs = xi ** (q.n + 2.0 * q.s) * kernel_K(q, xi)
    print(f"  xi={xi:.1f}   {lhs:.10f} vs {rhs:.10f}")

print("\nWeight routes near the singular endpoint (quadrature vs 2F1):")
for tau in (1.0 + 1e-6, 1.001, 1.1, 3.0):
    wq = kernel_weight(q, tau, route="quadrature")
    wh = kernel_weight(q, tau, route="hypergeometric")
    print(f"  tau-1={tau - 1.0:8.1e}   rel diff = {abs(wq - wh) / wh:.2e}")
