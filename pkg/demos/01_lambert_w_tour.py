"""Tour of the multi-branch Lambert W evaluator.

Walks the branch structure of w*exp(w) = z: the principal branch and its
real domain, the branch point at -1/e where W_0 and W_-1 meet, the
horizontal strips of the higher branches, and the Maclaurin series inside
|z| < 1/e.
"""

import cmath
import math

from lgw import BRANCH_POINT_Z, OMEGA, lambert_w, lambert_w_real, w_derivative, w_series

print("=== The principal branch ===")
print(f"W_0(0)  = {lambert_w(0, 0).value}")
print(f"W_0(1)  = {lambert_w(0, 1).value.real!r}   (the omega constant, {OMEGA})")
print(f"W_0(e)  = {lambert_w(0, math.e).value.real!r}  (since 1*e^1 = e)")

print()
print("=== The branch point z = -1/e ===")
print(f"z_bp = {BRANCH_POINT_Z!r}")
for k in (0, -1):
    ev = lambert_w(k, BRANCH_POINT_Z)
    print(f"W_{k}(-1/e) = {ev.value.real:+.9f}   residual {ev.residual:.2e}")
print("Both branches pinch to -1; the derivative blows up there.")

print()
print("=== Real fast path on the two real branches ===")
for x in (-0.3, -0.1, -0.01):
    print(f"x = {x:+.2f}:  W_0 = {lambert_w_real(0, x):+.6f}   "
          f"W_-1 = {lambert_w_real(-1, x):+.6f}")

print()
print("=== Branch strips: Im W_k(z) climbs by ~2*pi per branch ===")
z = 2.5 + 0.1j
for k in range(-3, 4):
    w = lambert_w(k, z).value
    check = abs(w * cmath.exp(w) - z)
    print(f"k = {k:+d}:  W_k({z}) = {w.real:+.4f}{w.imag:+.4f}i   |w e^w - z| = {check:.1e}")

print()
print("=== Maclaurin series (converges for |z| < 1/e) ===")
z = 0.1
for n in (1, 3, 10, 30):
    gap = abs(w_series(z, n) - lambert_w(0, z).value)
    print(f"n = {n:3d} terms: partial sum {w_series(z, n).real:.12f}   gap to W_0 {gap:.1e}")

print()
print("=== Derivative dW/dz = 1/(z + e^W) ===")
for z in (0, 1.0, 2 + 1j):
    d = w_derivative(0, z)
    h = 1e-6
    fd = (lambert_w(0, z + h).value - lambert_w(0, z - h).value) / (2 * h)
    print(f"z = {z}:  dW/dz = {d:.10f}   finite difference {fd:.10f}")
