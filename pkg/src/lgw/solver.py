"""Closed-form roots of z = A + B*exp(C*z) and the unit fixed-point layer.

The scalar equation is solved by z = A - W_k(-B*C*exp(A*C))/C, one root per
branch k. On top of that sit the two fixed-point families tied to a unit
epsilon of a quadratic field:

  complex case:  i*alpha = exp(2*pi*i*alpha) * log(eps)
  real case:     alpha   = cos(2*pi*alpha)   * log(eps)

The real-case equation is attacked by splitting cos into its two exponential
halves, solving each half on a Lambert branch, and summing the split roots.
Every result is returned with measured residuals of the equations it claims
to solve; the summed-equation residual is reported but never asserted,
because nothing forces the sum of the split roots to satisfy it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import DegenerateCoefficients, DomainError, NonFinite, ZeroLogUnit
from .wfunc import lambert_w

__all__ = [
    "Case",
    "Pairing",
    "ExpLinearEquation",
    "UnitInput",
    "FixedPointReport",
    "solve_exp_linear",
    "alpha_complex_case",
    "alpha_real_case",
    "verify_fixed_point",
    "unit_log",
]

_TWO_PI = 2.0 * math.pi
_TWO_PI_I = 2j * math.pi


class Case(str, Enum):
    COMPLEX = "complex"
    REAL = "real"


class Pairing(str, Enum):
    """Branch bookkeeping for the two split roots of the real case.

    CONJUGATE pairs branch j with -j, which makes the second split root the
    conjugate of the first and the sum real. SAME applies branch j to both
    halves (the literal formula), generally yielding a non-real sum.
    """

    SAME_BRANCH = "same-branch"
    CONJUGATE_BRANCH = "conjugate-branch"


def _finite(z: complex, what: str) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFinite(f"{what} is not finite: {z!r}")
    return z


@dataclass(frozen=True)
class ExpLinearEquation:
    """Coefficients of z = A + B*exp(C*z); requires B*C != 0."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        object.__setattr__(self, "a", _finite(self.a, "A"))
        object.__setattr__(self, "b", _finite(self.b, "B"))
        object.__setattr__(self, "c", _finite(self.c, "C"))
        if self.b * self.c == 0:
            raise DegenerateCoefficients("B*C must be nonzero")

    def residual(self, z: complex) -> float:
        """|z - A - B*exp(C*z)|, the defining-equation residual."""
        return abs(z - self.a - self.b * cmath.exp(self.c * z))


@dataclass(frozen=True)
class UnitInput:
    """A unit epsilon together with the log convention used on it.

    log(eps) means Log(eps) + 2*pi*i*log_branch with the principal Log
    (arg in (-pi, pi]). For units too large for a float64 (real quadratic
    fundamental units grow exponentially), epsilon may be None and
    log_value carries the regulator directly.
    """

    epsilon: complex | None
    log_branch: int = 0
    case: Case = Case.COMPLEX
    log_value: complex | None = None

    def __post_init__(self):
        if self.epsilon is None and self.log_value is None:
            raise DomainError("need epsilon or log_value")
        if self.epsilon is not None:
            eps = _finite(self.epsilon, "epsilon")
            object.__setattr__(self, "epsilon", eps)
            if self.case is Case.REAL:
                if eps.imag != 0.0:
                    raise DomainError(f"real-case unit must be real, got {eps!r}")
                if eps.real == 1.0:
                    raise ZeroLogUnit("epsilon = 1 has log 0")
                if eps.real <= 1.0:
                    raise DomainError(f"real-case unit must exceed 1, got {eps!r}")
            elif abs(eps) == 0.0:
                raise DomainError("complex case needs |epsilon| > 0")

    @classmethod
    def complex_unit(cls, epsilon: complex, log_branch: int = 0) -> "UnitInput":
        return cls(epsilon=epsilon, log_branch=int(log_branch), case=Case.COMPLEX)

    @classmethod
    def real_unit(cls, epsilon: float) -> "UnitInput":
        return cls(epsilon=complex(float(epsilon)), case=Case.REAL)

    @classmethod
    def from_log(cls, log_value: complex, case: Case = Case.COMPLEX) -> "UnitInput":
        """Build a synthetic unit whose log is forced to log_value exactly."""
        log_value = _finite(log_value, "log_value")
        if case is Case.REAL:
            if log_value.imag != 0.0:
                raise DomainError("real case needs a real log_value")
            if log_value.real == 0.0:
                raise ZeroLogUnit("log(epsilon) = 0")
            if log_value.real < 0.0:
                raise DomainError("real case needs log_value > 0")
            eps: complex | None
            eps = complex(math.exp(log_value.real)) if log_value.real < 700.0 else None
            return cls(epsilon=eps, case=case, log_value=log_value)
        return cls(epsilon=cmath.exp(log_value), case=case, log_value=log_value)


def unit_log(u: UnitInput) -> complex:
    """The chosen logarithm of the unit; raises ZeroLogUnit when it is 0."""
    if u.log_value is not None:
        base = complex(u.log_value)
    else:
        base = cmath.log(u.epsilon)
    if u.case is Case.REAL:
        value = complex(base.real)
    else:
        value = base + _TWO_PI_I * u.log_branch
    if value == 0:
        raise ZeroLogUnit("log(epsilon) = 0 under the chosen branch (epsilon = 1?)")
    return value


@dataclass(frozen=True)
class FixedPointReport:
    """A root alpha with the residuals of every equation it touches.

    residual_defining measures the case's defining equation. The split and
    summed-equation residuals apply to the real case only and are None for
    the complex case. residual_sum_equation is informational: it is recorded
    for audit and never asserted anywhere in this package.
    """

    alpha: complex
    branch: int
    beta: float = 0.0
    residual_defining: float = 0.0
    residual_split_1: float | None = None
    residual_split_2: float | None = None
    residual_sum_equation: float | None = None
    conventions: dict = field(default_factory=dict)


def solve_exp_linear(eq: ExpLinearEquation, k: int = 0) -> complex:
    """Root of z = A + B*exp(C*z) on Lambert branch k.

    z = A - W_k(-B*C*exp(A*C))/C; the returned root satisfies the equation
    with residual <= 1e-10*(1+|z|).
    """
    arg = -eq.b * eq.c * cmath.exp(eq.a * eq.c)
    w = lambert_w(k, arg).value
    return eq.a - w / eq.c


def alpha_complex_case(u: UnitInput, j: int = 0, beta: float = 0.0) -> FixedPointReport:
    """Root of i*alpha = exp(2*pi*i*alpha)*log(eps) on branch j.

    Computed through the exponential-linear form with A = beta,
    B = log(eps)*exp(-2*pi*beta), C = 2*pi; the auxiliary constant beta
    cancels in the Lambert argument, so alpha is independent of it.
    """
    if u.case is not Case.COMPLEX:
        raise DomainError("alpha_complex_case needs a complex-case unit")
    beta = float(beta)
    log_eps = unit_log(u)
    eq = ExpLinearEquation(a=beta, b=log_eps * math.exp(-_TWO_PI * beta), c=_TWO_PI)
    z = solve_exp_linear(eq, j)
    alpha = (z - beta) / 1j
    residual = abs(1j * alpha - cmath.exp(_TWO_PI_I * alpha) * log_eps)
    return FixedPointReport(
        alpha=alpha,
        branch=j,
        beta=beta,
        residual_defining=residual,
        conventions={"log_branch": u.log_branch, "case": u.case.value},
    )


def alpha_real_case(
    u: UnitInput, j: int = 0, pairing: Pairing = Pairing.CONJUGATE_BRANCH
) -> FixedPointReport:
    """Split roots of alpha = cos(2*pi*alpha)*log(eps) for a real unit > 1.

    The two split equations

        alpha = log(eps)*exp(+2*pi*i*alpha)
        alpha = log(eps)*exp(-2*pi*i*alpha)

    are solved on branches j and m (m = j for SAME_BRANCH, m = -j for
    CONJUGATE_BRANCH) and summed. Each split residual is asserted by the
    caller's contract (<= 1e-10); the summed-equation residual
    |2a - log(eps)*(e^{2pi i a} + e^{-2pi i a})| is only recorded.
    """
    if u.case is not Case.REAL:
        raise DomainError("alpha_real_case needs a real-case unit")
    pairing = Pairing(pairing)
    log_eps = unit_log(u).real
    m = j if pairing is Pairing.SAME_BRANCH else -j

    # alpha1 = -W_j(-2*pi*i*L)/(2*pi*i); alpha2 = +W_m(+2*pi*i*L)/(2*pi*i)
    w1 = lambert_w(j, -_TWO_PI_I * log_eps).value
    w2 = lambert_w(m, _TWO_PI_I * log_eps).value
    alpha1 = -w1 / _TWO_PI_I
    alpha2 = w2 / _TWO_PI_I
    alpha = alpha1 + alpha2

    r1 = abs(alpha1 - log_eps * cmath.exp(_TWO_PI_I * alpha1))
    r2 = abs(alpha2 - log_eps * cmath.exp(-_TWO_PI_I * alpha2))
    r_sum = abs(
        2.0 * alpha
        - log_eps * cmath.exp(_TWO_PI_I * alpha)
        - log_eps * cmath.exp(-_TWO_PI_I * alpha)
    )
    r_def = abs(alpha - cmath.cos(_TWO_PI * alpha) * log_eps)
    return FixedPointReport(
        alpha=alpha,
        branch=j,
        beta=0.0,
        residual_defining=r_def,
        residual_split_1=r1,
        residual_split_2=r2,
        residual_sum_equation=r_sum,
        conventions={"log_branch": 0, "pairing": pairing.value, "case": u.case.value},
    )


def verify_fixed_point(alpha: complex, u: UnitInput) -> float:
    """Residual of the case-appropriate defining equation at alpha.

    Complex case: |i*alpha - exp(2*pi*i*alpha)*log(eps)|.
    Real case:    |alpha - cos(2*pi*alpha)*log(eps)|.
    """
    alpha = _finite(alpha, "alpha")
    log_eps = unit_log(u)
    if u.case is Case.COMPLEX:
        return abs(1j * alpha - cmath.exp(_TWO_PI_I * alpha) * log_eps)
    return abs(alpha - cmath.cos(_TWO_PI * alpha) * log_eps.real)
