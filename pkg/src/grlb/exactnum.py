"""Exact numeric substrate: rationals, dense univariate polynomials, integration.

The scalar type is ``fractions.Fraction`` (re-exported as ``Rational``): it is
arbitrary precision, always reduced, and always carries a positive denominator.
``Polynomial`` stores dense coefficient tuples indexed by degree and keeps all
arithmetic exact.  Multiplication clears coefficient denominators and convolves
plain Python integers, which is substantially faster than Fraction-by-Fraction
products once coefficients grow to thousands of digits.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int]

__all__ = [
    "InvalidIntervalError",
    "Polynomial",
    "Rational",
    "factorial",
    "integrate",
    "poly_product",
    "to_decimal",
]


class InvalidIntervalError(ValueError):
    """Raised when a definite integral is requested over an interval with lo > hi."""


def _int_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Convolve two integer coefficient lists (schoolbook, zero-skipping)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _int_sqr(a: Sequence[int]) -> list[int]:
    """Square an integer coefficient list, exploiting symmetry of cross terms."""
    n = len(a)
    out = [0] * (2 * n - 1)
    for i in range(n):
        ai = a[i]
        if not ai:
            continue
        out[2 * i] += ai * ai
        doubled = ai << 1
        for j in range(i + 1, n):
            aj = a[j]
            if aj:
                out[i + j] += doubled * aj
    return out


def _int_pow(base: Sequence[int], exponent: int) -> list[int]:
    """Raise an integer coefficient list to a positive power by squaring."""
    result: list[int] | None = None
    cur = list(base)
    m = exponent
    while True:
        if m & 1:
            result = cur[:] if result is None else _int_mul(result, cur)
        m >>= 1
        if not m:
            break
        cur = _int_sqr(cur)
    assert result is not None
    return result


def _linear_pow_int(c0: int, c1: int, exponent: int) -> list[int]:
    """Expand (c0 + c1*t)**exponent by the binomial theorem in O(exponent) steps."""
    m = exponent
    pow0 = [1] * (m + 1)
    for idx in range(1, m + 1):
        pow0[idx] = pow0[idx - 1] * c0
    pow1 = [1] * (m + 1)
    for idx in range(1, m + 1):
        pow1[idx] = pow1[idx - 1] * c1
    out = [0] * (m + 1)
    binom = 1
    for k in range(m + 1):
        out[k] = binom * pow0[m - k] * pow1[k]
        binom = binom * (m - k) // (k + 1)
    return out


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are indexed by degree; trailing zeros are trimmed so the
    leading coefficient is nonzero unless the polynomial is zero (empty tuple).
    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, value: RationalLike) -> "Polynomial":
        return cls((value,))

    @classmethod
    def linear(cls, constant: RationalLike, slope: RationalLike) -> "Polynomial":
        """The polynomial constant + slope*t."""
        return cls((constant, slope))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of t**k (zero beyond the stored degree)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def _int_form(self) -> tuple[list[int], int]:
        """Return (integer coefficients, common denominator) with self = ints/den."""
        den = 1
        for c in self._coeffs:
            d = c.denominator
            den = den * d // math.gcd(den, d)
        return [c.numerator * (den // c.denominator) for c in self._coeffs], den

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "Polynomial(0)"
        parts = [f"{c}*t^{k}" if k else f"{c}" for k, c in enumerate(self._coeffs) if c]
        return "Polynomial(" + " + ".join(parts) + ")"

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self._coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial.zero()
            ints_a, den_a = self._int_form()
            ints_b, den_b = other._int_form()
            return _poly_from_int(_int_mul(ints_a, ints_b), den_a * den_b)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Polynomial(tuple(c * f for c in self._coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("polynomial power must be nonnegative")
        if exponent == 0:
            return Polynomial.one()
        if exponent == 1:
            return self
        if self.degree <= 0:
            c = self._coeffs[0] if self._coeffs else Fraction(0)
            return Polynomial((c**exponent,))
        ints, den = self._int_form()
        if self.degree == 1:
            # Binomial expansion beats repeated squaring for linear bases: the
            # products of a few thousand linear factors this library builds
            # would otherwise dominate the runtime.
            powered = _linear_pow_int(ints[0], ints[1], exponent)
        else:
            powered = _int_pow(ints, exponent)
        return _poly_from_int(powered, den**exponent)

    def __call__(self, x: RationalLike) -> Fraction:
        """Evaluate at x by Horner's rule."""
        xf = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * xf + c
        return acc


def _poly_from_int(ints: Sequence[int], den: int) -> Polynomial:
    if den == 1:
        return Polynomial(tuple(Fraction(c) for c in ints))
    return Polynomial(tuple(Fraction(c, den) for c in ints))


def poly_product(factors: Iterable[Polynomial]) -> Polynomial:
    """Multiply a sequence of polynomials; the empty product is 1.

    Identical factors are grouped and raised to their multiplicity first, and
    the remaining distinct polynomials are multiplied pairwise in a balanced
    tree so intermediate degrees stay comparable.
    """
    counts = Counter(factors)
    if not counts:
        return Polynomial.one()
    level = [base**mult for base, mult in counts.items()]
    while len(level) > 1:
        nxt = [level[k] * level[k + 1] for k in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def integrate(p: Polynomial, lo: RationalLike, hi: RationalLike) -> Fraction:
    """Exact definite integral of p over [lo, hi].

    Evaluates the antiderivative term by term: sum of c_k*(hi^(k+1)-lo^(k+1))/(k+1).
    Raises InvalidIntervalError when lo > hi.
    """
    lo_f, hi_f = Fraction(lo), Fraction(hi)
    if lo_f > hi_f:
        raise InvalidIntervalError(f"invalid interval: lo={lo_f} > hi={hi_f}")
    if p.is_zero:
        return Fraction(0)
    ints, den = p._int_form()
    # Integer powers when the bounds are integers keeps the hot loop cheap.
    lo_v = lo_f.numerator if lo_f.denominator == 1 else lo_f
    hi_v = hi_f.numerator if hi_f.denominator == 1 else hi_f
    lo_p: RationalLike = 1
    hi_p: RationalLike = 1
    total = Fraction(0)
    for k, c in enumerate(ints):
        lo_p *= lo_v
        hi_p *= hi_v
        if c:
            total += Fraction(c * (hi_p - lo_p), k + 1)
    return total / den


def factorial(n: int) -> int:
    """n! for nonnegative integer n."""
    if n < 0:
        raise ValueError("factorial is undefined for negative integers")
    return math.factorial(n)


def to_decimal(r: RationalLike, digits: int) -> str:
    """Decimal expansion of r with exactly `digits` fractional digits.

    Rounds half to even, so the parsed result never differs from r by more
    than half a unit in the last place.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    rf = Fraction(r)
    num, den = abs(rf).numerator, abs(rf).denominator
    q, rem = divmod(num * 10**digits, den)
    if 2 * rem > den or (2 * rem == den and q % 2 == 1):
        q += 1
    s = str(q).rjust(digits + 1, "0")
    sign = "-" if rf < 0 else ""
    return f"{sign}{s[:-digits]}.{s[-digits:]}"
