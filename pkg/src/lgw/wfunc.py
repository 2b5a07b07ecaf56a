"""Multi-branch Lambert W function on the complex plane.

W_k(z) is the k-th branch of the multivalued inverse of w -> w*exp(w).
Branch indexing follows the standard convention (Corless, Gonnet, Hare,
Jeffrey & Knuth, Adv. Comput. Math. 5, 1996): W_0 is the principal branch,
real on [-1/e, inf); Im W_k(z) lives in horizontal strips indexed by k,
and values on the cuts are continuous from above.

Evaluation seeds an initial guess per region (Taylor/Pade near 0,
branch-point series in p = +/-sqrt(2(e*z+1)) near z = -1/e, asymptotic
L1 - L2 + L2/L1 with L1 = log z + 2*pi*i*k, L2 = log L1 elsewhere) and
polishes it with Halley's method.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BranchPointSingularity,
    BranchSingularity,
    DomainError,
    NoConvergence,
    NonFinite,
    TermLimitExceeded,
)

__all__ = [
    "BRANCH_POINT_Z",
    "OMEGA",
    "WEvaluation",
    "lambert_w",
    "lambert_w_real",
    "w_derivative",
    "w_series",
]

# z = -1/e, where branches 0 and -1 meet and dW/dz is singular.
BRANCH_POINT_Z = -1.0 / math.e

# W_0(1), fixed point of exp(-x).
OMEGA = 0.5671432904097838

_TWO_PI = 2.0 * math.pi
_MAX_ITER = 64
_STEP_TOL = 1e-15
_RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class WEvaluation:
    """One converged branch evaluation.

    residual is |w*exp(w) - z| / (1 + |z|); success guarantees <= 1e-12.
    """

    value: complex
    branch: int
    residual: float
    iterations: int


def _require_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFinite(f"non-finite argument {z!r}")
    return z


def _residual(w: complex, z: complex) -> float:
    """Normalized defining-equation residual |w e^w - z| / (1 + |z|)."""
    if w.real <= 500.0:
        return abs(w * cmath.exp(w) - z) / (1.0 + abs(z))
    # Avoid overflow in exp for extreme arguments: compare in log space.
    # w*e^w/z = exp(w + log w - log z) up to a multiple of 2*pi*i.
    t = w + cmath.log(w) - cmath.log(z)
    t -= 2j * math.pi * round(t.imag / _TWO_PI)
    return abs(cmath.exp(t) - 1.0) * abs(z) / (1.0 + abs(z))


def _series_seed(z: complex) -> complex:
    # Pade [3/2] of the Maclaurin series; good well beyond |z| = 1/e.
    num = 1.0 + z * (1.9 + 0.2833333333333333 * z)
    den = 1.0 + z * (2.9 + 1.6833333333333333 * z)
    return z * num / den


def _branch_point_seed(z: complex, negative_root: bool) -> complex:
    p = cmath.sqrt(2.0 * (math.e * z + 1.0))
    if negative_root:
        p = -p
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 - p * 43.0 / 540.0)))


def _asymptotic_seed(z: complex, k: int) -> complex:
    l1 = cmath.log(z) + 2j * math.pi * k
    l2 = cmath.log(l1)
    r = l2 / l1
    # First terms of the standard asymptotic expansion in l2/l1.
    return l1 - l2 + r * (1.0 + (l2 - 2.0) / (2.0 * l1) + (2.0 * l2 * l2 - 9.0 * l2 + 6.0) / (6.0 * l1 * l1))


def _initial_guess(k: int, z: complex) -> complex:
    near_bp = abs(z - BRANCH_POINT_Z) <= 0.3
    if k == 0:
        if near_bp:
            return _branch_point_seed(z, negative_root=False)
        # Pade seed only away from the cut, where it stays on-branch.
        if -1.0 < z.real < 1.5 and abs(z.imag) < 1.0 and z.real > -2.5 * abs(z.imag) - 0.2:
            return _series_seed(z)
        return _asymptotic_seed(z, 0)
    # Branches -1 and +1 pinch onto the -1 - p cluster at the branch point:
    # W_-1 owns it for Im z >= 0 (cut values continuous from above), W_+1
    # for Im z < 0; on the other side both run in their asymptotic strips.
    if k == -1:
        if z.imag == 0.0 and BRANCH_POINT_Z <= z.real < 0.0:
            # Real branch segment; keep the iteration on the real line.
            if near_bp:
                return _branch_point_seed(z, negative_root=True)
            l1 = math.log(-z.real)
            return complex(l1 - math.log(-l1))
        if near_bp and z.imag >= 0.0:
            return _branch_point_seed(z, negative_root=True)
        return _asymptotic_seed(z, -1)
    if k == 1 and near_bp and z.imag < 0.0:
        return _branch_point_seed(z, negative_root=True)
    return _asymptotic_seed(z, k)


def _halley(z: complex, w: complex) -> tuple[complex, int, bool]:
    """Polish a seed; returns (w, iterations, converged-by-step-size)."""
    for it in range(1, _MAX_ITER + 1):
        if w.real > 0.0:
            # Rearranged update avoids overflow in exp(w) for large Re w.
            ewz = z * cmath.exp(-w)
            f = w - ewz
            wp1 = w + 1.0
            if wp1 == 0.0:
                w += 1e-8
                continue
            denom = wp1 - (w + 2.0) * f / (2.0 * wp1)
        else:
            ew = cmath.exp(w)
            f = w * ew - z
            wp1 = w + 1.0
            if wp1 == 0.0:
                w += 1e-8
                continue
            denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        if denom == 0.0 or f == 0.0:
            return w, it, True
        dw = f / denom
        w = w - dw
        if abs(dw) < _STEP_TOL * (1.0 + abs(w)):
            return w, it, True
    return w, _MAX_ITER, False


def lambert_w(k: int, z: complex) -> WEvaluation:
    """Evaluate the k-th branch of the Lambert W function at complex z.

    Parameters
    ----------
    k : int
        Branch index; any integer, |k| <= 64 exercised routinely.
    z : complex
        Finite evaluation point. z = 0 is only valid on the principal
        branch (W_k(0) diverges for k != 0).

    Returns
    -------
    WEvaluation with a value w satisfying w*exp(w) = z to relative
    residual <= 1e-12.

    Raises
    ------
    NonFinite, BranchSingularity, NoConvergence
    """
    z = _require_finite(z)
    k = int(k)
    if z == 0:
        if k == 0:
            return WEvaluation(0j, 0, 0.0, 0)
        raise BranchSingularity(f"W_{k}(0) diverges")
    w0 = _initial_guess(k, z)
    w, iterations, stepped = _halley(z, w0)
    res = _residual(w, z)
    if not stepped and res > _RESIDUAL_TOL:
        raise NoConvergence(
            f"Halley failed for W_{k}({z!r}): residual {res:.3e} after {_MAX_ITER} iterations"
        )
    if res > _RESIDUAL_TOL:
        raise NoConvergence(f"W_{k}({z!r}) converged to residual {res:.3e} > 1e-12")
    return WEvaluation(w, k, res, iterations)


def lambert_w_real(k: int, x: float) -> float:
    """Real-restricted fast path for branches 0 and -1.

    k = 0 needs x >= -1/e; k = -1 needs -1/e <= x < 0. Agrees with
    lambert_w to ~1 ulp (1e-14 relative).
    """
    x = float(x)
    if not math.isfinite(x):
        raise NonFinite(f"non-finite argument {x!r}")
    if k == 0:
        if x < BRANCH_POINT_Z:
            raise DomainError(f"W_0 real domain is [-1/e, inf); got {x}")
    elif k == -1:
        if not (BRANCH_POINT_Z <= x < 0.0):
            raise DomainError(f"W_-1 real domain is [-1/e, 0); got {x}")
    else:
        raise DomainError(f"real branches are 0 and -1; got k={k}")
    if x == 0.0:
        return 0.0
    if x == BRANCH_POINT_Z:
        return -1.0

    if k == 0:
        if abs(x - BRANCH_POINT_Z) <= 0.3:
            p = math.sqrt(2.0 * (math.e * x + 1.0))
            w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 - p * 43.0 / 540.0)))
        elif x <= 1.5:
            w = x * (1.0 + x * (1.9 + 0.2833333333333333 * x)) / (
                1.0 + x * (2.9 + 1.6833333333333333 * x)
            )
        else:
            l1 = math.log(x)
            l2 = math.log(l1)
            w = l1 - l2 + l2 / l1
    else:
        if abs(x - BRANCH_POINT_Z) <= 0.3:
            p = -math.sqrt(2.0 * (math.e * x + 1.0))
            w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 - p * 43.0 / 540.0)))
        else:
            l1 = math.log(-x)
            w = l1 - math.log(-l1)

    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0 or f == 0.0:
            break
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= dw
        if abs(dw) < _STEP_TOL * (1.0 + abs(w)):
            break
    return w


def w_derivative(k: int, z: complex) -> complex:
    """dW_k/dz = 1 / (z + exp(W_k(z))); singular at the branch point."""
    z = _require_finite(z)
    if abs(z - BRANCH_POINT_Z) <= 1e-12:
        raise BranchPointSingularity("derivative singular at z = -1/e")
    w = lambert_w(k, z).value
    return 1.0 / (z + cmath.exp(w))


def w_series(z: complex, n_terms: int) -> complex:
    """Truncated Maclaurin series sum_{n=1}^{n_terms} (-n)^(n-1)/n! * z^n.

    Converges for |z| < 1/e. Coefficients are formed from exact integers,
    so each term is correctly rounded; n_terms is capped at 170 where the
    float dynamic range of the coefficients runs out.
    """
    z = _require_finite(z)
    n_terms = int(n_terms)
    if n_terms < 1:
        raise TermLimitExceeded("n_terms must be >= 1")
    if n_terms > 170:
        raise TermLimitExceeded(f"n_terms {n_terms} exceeds the supported cap of 170")
    total = 0j
    factorial = 1
    zn = complex(1.0)
    for n in range(1, n_terms + 1):
        factorial *= n
        zn *= z
        # (-n)^(n-1)/n! as a correctly rounded float; exact integers first.
        coeff = float(Fraction((-n) ** (n - 1), factorial))
        total += coeff * zn
    return total
