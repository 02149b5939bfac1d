"""Independent closed-form evaluations for the parametric families.

The X1(n) and X3(n, k) bounds have explicit integral formulas, and X3(n, n)
additionally collapses to a factorial expression.  This module evaluates all
of them directly from expanded integrands, without touching the root-system
pipeline, so the two routes can be compared exactly.  It also carries the
inequality and asymptotic-bound checks that control the limiting behaviour
of each family.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

import mpmath

from .exactnum import Polynomial, factorial, integrate

__all__ = [
    "BoundCheck",
    "InvalidParameterError",
    "a_recurrence_factor",
    "a_sequence",
    "asymptotic_bounds",
    "lemma_x1_sign",
    "lemma_x3nk_sign",
    "r_x1_formula",
    "r_x3_formula",
    "r_x3nn_closed",
    "stirling_upper_bound",
    "x1_comparison_integral",
    "x1_integrand",
    "x3_integrand",
]

#: Decimal working precision for the irrational side of the Stirling bound.
STIRLING_PRECISION_DPS = 60


class InvalidParameterError(ValueError):
    """Raised for parameters outside a formula's domain."""


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of one exact (or high-precision) inequality instance.

    relation is one of "lower-bound" (lhs > rhs), "upper-bound" (lhs < rhs),
    "sign" (lhs > 0, rhs ignored and stored as 0) and "equality" (lhs == rhs).
    """

    params: tuple[int, ...]
    relation: str
    lhs: Fraction
    rhs: Fraction
    holds: bool

    @staticmethod
    def evaluate(params: tuple[int, ...], relation: str, lhs: Fraction, rhs: Fraction) -> "BoundCheck":
        if relation == "lower-bound":
            holds = lhs > rhs
        elif relation == "upper-bound":
            holds = lhs < rhs
        elif relation == "sign":
            holds = lhs > 0
        elif relation == "equality":
            holds = lhs == rhs
        else:
            raise ValueError(f"unknown relation tag {relation!r}")
        return BoundCheck(params=params, relation=relation, lhs=lhs, rhs=rhs, holds=holds)

    @property
    def margin(self) -> Fraction:
        """Slack by which the relation holds (negative when violated)."""
        if self.relation in ("sign",):
            return self.lhs
        if self.relation == "lower-bound":
            return self.lhs - self.rhs
        if self.relation == "upper-bound":
            return self.rhs - self.lhs
        return -abs(self.lhs - self.rhs)


def _lin(c0: int, c1: int) -> Polynomial:
    return Polynomial.linear(c0, c1)


def x1_integrand(n: int) -> Polynomial:
    """(2-t) (n+t)^(n-1) (t+2n+2)^(n(n-1)/2), the common X1(n) integrand."""
    return _lin(2, -1) * _lin(n, 1) ** (n - 1) * _lin(2 * n + 2, 1) ** (n * (n - 1) // 2)


def r_x1_formula(n: int) -> Fraction:
    """R(X1(n)) as the explicit ratio of integrals over [-n, 2]."""
    if n < 3:
        raise InvalidParameterError("X1 formula requires n >= 3")
    base = x1_integrand(n)
    num = integrate(base, -n, 2)
    den = integrate(base * _lin(n, 1), -n, 2)
    return n * num / den


def x3_integrand(n: int, k: int) -> Polynomial:
    """(k+t)^(k-1) (2n-2k+2-t)^(2n-2k+1) (4n-3k+4-t)^(k-1), the X3(n,k) integrand."""
    b = 2 * n - 2 * k + 2
    return _lin(k, 1) ** (k - 1) * _lin(b, -1) ** (b - 1) * _lin(4 * n - 3 * k + 4, -1) ** (k - 1)


def r_x3_formula(n: int, k: int) -> Fraction:
    """R(X3(n, k)) as the explicit ratio of integrals over [-k, 2n-2k+2].

    Valid for n >= k >= 2; at k == n it reproduces the factorial closed form.
    """
    if not (isinstance(n, int) and isinstance(k, int) and n >= k >= 2):
        raise InvalidParameterError("X3 formula requires n >= k >= 2")
    b = 2 * n - 2 * k + 2
    base = x3_integrand(n, k)
    num = integrate(base, -k, b)
    den = integrate(base * _lin(b, -1), -k, b)
    return b * num / den


def r_x3nn_closed(n: int) -> Fraction:
    """R(X3(n, n)) = 2 (2n+1)! / ((n+2) (2^n n!)^2), exact."""
    if n < 2:
        raise InvalidParameterError("X3(n, n) closed form requires n >= 2")
    return Fraction(2 * factorial(2 * n + 1), (n + 2) * (2**n * factorial(n)) ** 2)


def a_sequence(n: int) -> Fraction:
    """a_n = (n+2) * Integral_0^1 (1-t^2)^n dt = (n+2)(2^n n!)^2 / (2n+1)!."""
    if n < 0:
        raise InvalidParameterError("a_n requires n >= 0")
    return Fraction((n + 2) * (2**n * factorial(n)) ** 2, factorial(2 * n + 1))


def a_recurrence_factor(n: int) -> Fraction:
    """Multiplier taking a_n to a_{n+1}: (n+3)(2n+2) / ((n+2)(2n+3))."""
    return Fraction((n + 3) * (2 * n + 2), (n + 2) * (2 * n + 3))


def lemma_x1_sign(n: int) -> BoundCheck:
    """Positivity of Integral_{-n}^{2} t (2-t) (n+t)^(n-1) (t+2n+2)^(n(n-1)/2) dt."""
    if n < 3:
        raise InvalidParameterError("X1 sign lemma requires n >= 3")
    weighted = Polynomial((0, 1)) * x1_integrand(n)
    value = integrate(weighted, -n, 2)
    return BoundCheck.evaluate((n,), "sign", value, Fraction(0))


def x1_comparison_integral(n: int) -> Fraction:
    """The comparison integral with the top factor frozen at its left value.

    Integral_{-n}^{2} t (2-t) (n+t)^(n-1) (2n+2)^(n(n-1)/2) dt vanishes exactly;
    it is the baseline against which the sign lemma is proved.
    """
    if n < 3:
        raise InvalidParameterError("comparison integral requires n >= 3")
    p = Polynomial((0, 1)) * _lin(2, -1) * _lin(n, 1) ** (n - 1)
    scale = Fraction((2 * n + 2) ** (n * (n - 1) // 2))
    return scale * integrate(p, -n, 2)


def lemma_x3nk_sign(n: int, k: int) -> BoundCheck:
    """The (k+t)-weighted mean of the X3 integrand stays strictly below k."""
    if not n > k >= 2:
        raise InvalidParameterError("X3(n, k) sign lemma requires n > k >= 2")
    b = 2 * n - 2 * k + 2
    base = x3_integrand(n, k)
    ratio = integrate(base * _lin(k, 1), -k, b) / integrate(base, -k, b)
    return BoundCheck.evaluate((n, k), "upper-bound", ratio, Fraction(k))


def _mp_to_fraction(x: "mpmath.mpf") -> Fraction:
    # Exact through a decimal string: Decimal keeps all printed digits.
    return Fraction(Decimal(mpmath.nstr(x, STIRLING_PRECISION_DPS - 5)))


def stirling_upper_bound(n: int) -> Fraction:
    """High-precision value of (2 sqrt(2n+1) / (pi (n+2))) (1 + 1/(2n))^(2n+1).

    The bound mixes the rational factor (1+1/(2n))^(2n+1) with sqrt and pi, so
    it cannot be exact; it is evaluated at STIRLING_PRECISION_DPS significant
    digits and returned as the exact rational value of that approximation.
    The error is below 1e-50, orders of magnitude smaller than any margin
    observed on the supported grids.
    """
    if n < 1:
        raise InvalidParameterError("Stirling bound requires n >= 1")
    rational_part = Fraction(2, n + 2) * (Fraction(2 * n + 1, 2 * n)) ** (2 * n + 1)
    with mpmath.workdps(STIRLING_PRECISION_DPS):
        irrational = mpmath.sqrt(2 * n + 1) / mpmath.pi
        scaled = irrational * mpmath.mpf(rational_part.numerator) / rational_part.denominator
        return _mp_to_fraction(scaled)


def asymptotic_bounds(family: str, n: int, k: int | None = None) -> BoundCheck:
    """The bound behind each family's limit, instantiated at (n, k).

    X1: R(X1(n)) > n/(n+2), exact.
    X3 with k < n: R(X3(n, k)) > (2n-2k+2)/(2n-k+2), exact.
    X3 with k == n: R(X3(n, n)) < Stirling upper bound, at high precision.
    """
    if family == "X1":
        if k is not None:
            raise InvalidParameterError("X1 bound takes no parameter k")
        lhs = r_x1_formula(n)
        return BoundCheck.evaluate((n,), "lower-bound", lhs, Fraction(n, n + 2))
    if family == "X3":
        if k is None or not n >= k >= 2:
            raise InvalidParameterError("X3 bound requires n >= k >= 2")
        if k < n:
            lhs = r_x3_formula(n, k)
            return BoundCheck.evaluate(
                (n, k), "lower-bound", lhs, Fraction(2 * n - 2 * k + 2, 2 * n - k + 2)
            )
        return BoundCheck.evaluate((n, n), "upper-bound", r_x3nn_closed(n), stirling_upper_bound(n))
    raise InvalidParameterError(f"no asymptotic bound for family {family!r}")
