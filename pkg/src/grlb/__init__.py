"""Exact greatest Ricci lower bounds of nonhomogeneous projective
horospherical manifolds of Picard number one.

The five families X1(n), X2, X3(n, k), X4, X5 each have a one-dimensional
moment polytope; this package computes the Duistermaat-Heckman barycenter of
that segment in exact rational arithmetic and derives the greatest Ricci
lower bound R(X) from it, cross-checked against closed formulas and a
floating-point quadrature oracle.
"""

from .engine import (
    ComputationReport,
    HorosphericalDatum,
    InvalidDatumError,
    MomentSegment,
    barycenter_t,
    dh_polynomial,
    dimension,
    greatest_ricci_lower_bound,
    moment_segment,
    report,
    resolve,
)
from .exactnum import Polynomial, Rational, factorial, integrate, poly_product, to_decimal
from .rootsystems import RootSystem, WeightExpr, build_root_system, coroot_pairing, rho_G

__version__ = "0.1.0"

__all__ = [
    "ComputationReport",
    "HorosphericalDatum",
    "InvalidDatumError",
    "MomentSegment",
    "Polynomial",
    "Rational",
    "RootSystem",
    "WeightExpr",
    "barycenter_t",
    "build_root_system",
    "coroot_pairing",
    "dh_polynomial",
    "dimension",
    "factorial",
    "greatest_ricci_lower_bound",
    "integrate",
    "moment_segment",
    "poly_product",
    "report",
    "resolve",
    "rho_G",
    "to_decimal",
]
