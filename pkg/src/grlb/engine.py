"""Moment-segment pipeline for the five families of nonhomogeneous projective
horospherical manifolds of Picard number one.

Each manifold is encoded by a `HorosphericalDatum`: a family tag X1..X5 plus
the integer parameters the family takes.  The datum resolves to a root system
with two marked simple roots (i, j); the computation then proceeds entirely in
exact rational arithmetic:

    marked roots -> Phi_Pu (roots of the unipotent radical)
                 -> 2*rho_P = sum of Phi_Pu, supported on the marked indices
                 -> moment segment gamma(t) = (a+t) w_i + (b-t) w_j, t in [-a, b]
                 -> Duistermaat-Heckman density P(t) = prod of linear factors
                 -> barycenter parameter tbar = Int t P / Int P
                 -> greatest Ricci lower bound R from the position of tbar.

Orientation convention: the marked index whose fundamental-weight coefficient
grows with t is *i*.  For X3 and X5 this is the second root of the defining
pair, so the segment parametrizations (and hence the sign of tbar) match the
closed-form derivations for every family.  R itself is orientation-free:
swapping (i, a) with (j, b) negates tbar and leaves R unchanged.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Polynomial, integrate, poly_product
from .rootsystems import (
    RootSystem,
    RootVector,
    WeightExpr,
    build_root_system,
    coroot_pairing,
    weight_of_root_sum,
)

__all__ = [
    "DEFAULT_MAX_EXACT_N",
    "ComputationReport",
    "DegenerateMeasureError",
    "FAMILIES",
    "HorosphericalDatum",
    "InvalidDatumError",
    "MomentSegment",
    "barycenter_on",
    "barycenter_t",
    "dh_polynomial",
    "dh_polynomial_on",
    "dimension",
    "greatest_ricci_lower_bound",
    "max_exact_n",
    "moment_segment",
    "phi_pu",
    "report",
    "resolve",
    "ricci_bound",
    "two_rho_P",
]

FAMILIES = ("X1", "X2", "X3", "X4", "X5")

#: Families whose defining pair of marked roots is listed in the opposite
#: order to the segment orientation fixed above.
_FLIPPED_FAMILIES = frozenset({"X3", "X5"})

#: Default ceiling on the size parameter n for exact computation.  Near the
#: ceiling a single value takes minutes; there is no floating-point fallback.
DEFAULT_MAX_EXACT_N = 100

_MAX_N_ENV = "GRLB_MAX_N"


class InvalidDatumError(ValueError):
    """Raised when family parameters violate the classification constraints."""


class DegenerateMeasureError(ArithmeticError):
    """Raised if a Duistermaat-Heckman density integrates to zero."""


def max_exact_n() -> int:
    """Ceiling on n for exact computation; GRLB_MAX_N overrides the default."""
    raw = os.environ.get(_MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_EXACT_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_MAX_N_ENV} must be an integer, got {raw!r}") from None
    if value < 2:
        raise ValueError(f"{_MAX_N_ENV} must be at least 2, got {value}")
    return value


@dataclass(frozen=True)
class HorosphericalDatum:
    """Family tag plus the integer parameters the family takes.

    X1(n) needs n >= 3, X3(n, k) needs n >= k >= 2, and X2, X4, X5 are
    parameter-free.  Violations raise InvalidDatumError at construction.
    """

    family: str
    n: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        f = self.family
        if f not in FAMILIES:
            raise InvalidDatumError(
                f"unknown family {f!r}: the classification lists X1..X5"
            )
        if f == "X1":
            if self.n is None or self.n < 3:
                raise InvalidDatumError("family X1 requires n >= 3")
            if self.k is not None:
                raise InvalidDatumError("family X1 takes no parameter k")
        elif f == "X3":
            if self.n is None or self.k is None or not self.n >= self.k >= 2:
                raise InvalidDatumError("family X3 requires n >= k >= 2")
        else:
            if self.n is not None or self.k is not None:
                raise InvalidDatumError(f"family {f} takes no parameters")

    @property
    def params(self) -> dict[str, int]:
        out = {}
        if self.n is not None:
            out["n"] = self.n
        if self.k is not None:
            out["k"] = self.k
        return out

    def label(self) -> str:
        if self.family == "X1":
            return f"X1({self.n})"
        if self.family == "X3":
            return f"X3({self.n},{self.k})"
        return self.family


@dataclass(frozen=True)
class MomentSegment:
    """The anticanonical moment polytope as a parametrized line segment.

    Points are gamma(t) = (a+t) w_i + (b-t) w_j for t in [-a, b], where
    a and b are the coefficients of 2*rho_P on the marked indices i and j.
    """

    two_rho_P: WeightExpr
    i: int
    j: int
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        if not (self.a > 0 and self.b > 0):
            raise ValueError("segment endpoints must have positive coefficients")
        if self.two_rho_P.support != {self.i, self.j}:
            raise ValueError(
                "2*rho_P must be supported exactly on the marked indices "
                f"{{{self.i}, {self.j}}}, got {self.two_rho_P!r}"
            )

    def point_at(self, t: Fraction) -> WeightExpr:
        """gamma(t) in fundamental-weight coordinates."""
        return WeightExpr({self.i: self.a + t, self.j: self.b - t})


@dataclass(frozen=True)
class ComputationReport:
    """Every exact quantity the pipeline produces for one datum."""

    datum: HorosphericalDatum
    dimension: int
    segment: MomentSegment
    dh_degree: int
    volume: Fraction
    barycenter_t: Fraction
    barycenter_point: WeightExpr
    R: Fraction


def resolve(datum: HorosphericalDatum) -> tuple[RootSystem, int, int]:
    """Root system and marked simple roots (in classification order) for a datum."""
    n = datum.n
    if n is not None and n > max_exact_n():
        raise InvalidDatumError(
            f"n={n} exceeds the exact-computation ceiling {max_exact_n()} "
            f"(override with {_MAX_N_ENV})"
        )
    f = datum.family
    if f == "X1":
        return build_root_system("B", n), n - 1, n
    if f == "X2":
        return build_root_system("B", 3), 1, 3
    if f == "X3":
        return build_root_system("C", n), datum.k, datum.k - 1
    if f == "X4":
        return build_root_system("F4", 4), 2, 3
    return build_root_system("G2", 2), 2, 1


def phi_pu(rs: RootSystem, i: int, j: int) -> tuple[RootVector, ...]:
    """Positive roots with a nonzero coefficient on at least one marked index."""
    if i == j or not (1 <= i <= rs.rank and 1 <= j <= rs.rank):
        raise ValueError(f"marked indices must be distinct and in 1..{rs.rank}")
    return tuple(r for r in rs.positive_roots if r[i - 1] > 0 or r[j - 1] > 0)


def two_rho_P(rs: RootSystem, i: int, j: int) -> WeightExpr:
    """Sum of the roots of the unipotent radical, in fundamental-weight coordinates."""
    return weight_of_root_sum(rs, phi_pu(rs, i, j))


def moment_segment(datum: HorosphericalDatum) -> MomentSegment:
    """Oriented moment segment for a datum (see module docstring for orientation)."""
    rs, p, q = resolve(datum)
    i, j = (q, p) if datum.family in _FLIPPED_FAMILIES else (p, q)
    w = two_rho_P(rs, i, j)
    a = coroot_pairing(rs, i, w)
    b = coroot_pairing(rs, j, w)
    return MomentSegment(two_rho_P=w, i=i, j=j, a=a, b=b)


def dh_polynomial_on(rs: RootSystem, seg: MomentSegment) -> Polynomial:
    """Duistermaat-Heckman density restricted to a segment over a given root system.

    Each root of the unipotent radical contributes the linear factor
    c_i*d_i*(a+t) + c_j*d_j*(b-t) where (c_i, c_j) are its coefficients on
    the marked simple roots and d_m the half squared lengths.
    """
    d_i = rs.half_lengths[seg.i - 1]
    d_j = rs.half_lengths[seg.j - 1]
    factors = []
    for root in phi_pu(rs, seg.i, seg.j):
        u = root[seg.i - 1] * d_i
        v = root[seg.j - 1] * d_j
        factors.append(Polynomial.linear(u * seg.a + v * seg.b, u - v))
    return poly_product(factors)


def dh_polynomial(datum: HorosphericalDatum) -> Polynomial:
    """Duistermaat-Heckman density of the datum's moment segment."""
    rs, _, _ = resolve(datum)
    return dh_polynomial_on(rs, moment_segment(datum))


def _times_t(p: Polynomial) -> Polynomial:
    return Polynomial((Fraction(0),) + p.coeffs)


def _moments(rs: RootSystem, seg: MomentSegment) -> tuple[Fraction, Fraction]:
    """(volume, first moment) of the density over [-a, b]."""
    density = dh_polynomial_on(rs, seg)
    volume = integrate(density, -seg.a, seg.b)
    if volume == 0:
        raise DegenerateMeasureError("Duistermaat-Heckman density has zero volume")
    first = integrate(_times_t(density), -seg.a, seg.b)
    return volume, first


def barycenter_on(rs: RootSystem, seg: MomentSegment) -> Fraction:
    """Density-weighted mean parameter of the segment."""
    volume, first = _moments(rs, seg)
    return first / volume


def barycenter_t(datum: HorosphericalDatum) -> Fraction:
    """Exact barycenter parameter tbar of the datum's moment segment."""
    rs, _, _ = resolve(datum)
    return barycenter_on(rs, moment_segment(datum))


def ricci_bound(a: Fraction, b: Fraction, t_bar: Fraction) -> Fraction:
    """Greatest Ricci lower bound from segment data.

    The distinguished interior point sits at t=0 and the barycenter at t_bar;
    the bound is the ratio in which the ray from the barycenter through t=0
    meets the far endpoint.  t_bar == 0 is the continuous limit R = 1.
    """
    if t_bar > 0:
        return a / (a + t_bar)
    if t_bar < 0:
        return b / (b - t_bar)
    return Fraction(1)


def greatest_ricci_lower_bound(datum: HorosphericalDatum) -> Fraction:
    """Exact greatest Ricci lower bound R(X) for the datum."""
    rs, _, _ = resolve(datum)
    seg = moment_segment(datum)
    return ricci_bound(seg.a, seg.b, barycenter_on(rs, seg))


def dimension(datum: HorosphericalDatum) -> int:
    """Dimension of the manifold: |Phi_Pu| + 1 (rank-one torus fiber over G/P)."""
    rs, p, q = resolve(datum)
    return len(phi_pu(rs, p, q)) + 1


def report(datum: HorosphericalDatum) -> ComputationReport:
    """Run the full pipeline once and collect every exact quantity."""
    rs, _, _ = resolve(datum)
    seg = moment_segment(datum)
    density = dh_polynomial_on(rs, seg)
    volume = integrate(density, -seg.a, seg.b)
    if volume == 0:
        raise DegenerateMeasureError("Duistermaat-Heckman density has zero volume")
    t_bar = integrate(_times_t(density), -seg.a, seg.b) / volume
    return ComputationReport(
        datum=datum,
        dimension=len(phi_pu(rs, seg.i, seg.j)) + 1,
        segment=seg,
        dh_degree=density.degree,
        volume=volume,
        barycenter_t=t_bar,
        barycenter_point=seg.point_at(t_bar),
        R=ricci_bound(seg.a, seg.b, t_bar),
    )
