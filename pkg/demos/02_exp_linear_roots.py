"""Closed-form roots of z = A + B*exp(C*z), one per Lambert branch.

The substitution u = C*(z - A) turns the equation into u*e^(-u) = B*C*e^(A*C),
so every branch k of W contributes the root z = A - W_k(-B*C*e^(A*C))/C.
"""

import math
import random

from lgw import ExpLinearEquation, solve_exp_linear

print("=== z = e^{-z}: the classic fixed point ===")
eq = ExpLinearEquation(a=0, b=1, c=-1)
z = solve_exp_linear(eq, k=0)
print(f"root: {z.real!r}   residual |z - e^-z| = {eq.residual(z):.2e}")

print()
print("=== One equation, many roots: z = 1 + 2*exp(z/2) ===")
eq = ExpLinearEquation(a=1, b=2, c=0.5)


def f(t):
    return t - 1.0 - 2.0 * math.exp(0.5 * t)


# the real section never crosses zero (max of t - 1 - 2e^(t/2) is negative),
# so all roots are genuinely complex, a conjugate-looking pair per branch pair
grid = [f(-40 + i * 0.01) for i in range(8000)]
sign_changes = sum(1 for a, b in zip(grid, grid[1:]) if (a < 0) != (b < 0))
print(f"sign changes of the real section on [-40, 40]: {sign_changes}")
for k in (-2, -1, 0, 1, 2):
    z = solve_exp_linear(eq, k)
    print(f"branch {k:+d}: z = {z.real:+.6f}{z.imag:+.6f}i   residual {eq.residual(z):.2e}")

print()
print("=== Random stress: 8 random complex equations across branches ===")
rng = random.Random(12)
for i in range(8):
    a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
    b = complex(rng.uniform(0.2, 3), rng.uniform(-2, 2))
    c = complex(rng.uniform(0.2, 3), rng.uniform(-2, 2))
    eq = ExpLinearEquation(a, b, c)
    k = rng.randint(-2, 2)
    z = solve_exp_linear(eq, k)
    print(f"A={a:.2f} B={b:.2f} C={c:.2f} k={k:+d}: residual {eq.residual(z):.2e}")
