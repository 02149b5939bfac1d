"""Positive-root data for the root systems B_n, C_n, F4 and G2.

Simple roots are numbered 1..rank in the standard Bourbaki/Humphreys order.
Positive roots are stored as coefficient vectors over the simple roots
(index m-1 of the tuple is the coefficient of alpha_m).  For B_n and C_n the
roots are generated from the orthonormal-basis description and converted to
simple-root coordinates:

    B_n (alpha_m = L_m - L_{m+1} for m < n, alpha_n = L_n):
        L_i - L_j  ->  alpha_i + ... + alpha_{j-1}
        L_i        ->  alpha_i + ... + alpha_n
        L_i + L_j  ->  alpha_i + ... + alpha_{j-1} + 2(alpha_j + ... + alpha_n)

    C_n (alpha_m = L_m - L_{m+1} for m < n, alpha_n = 2 L_n):
        L_i - L_j  ->  alpha_i + ... + alpha_{j-1}
        2 L_i      ->  2(alpha_i + ... + alpha_{n-1}) + alpha_n
        L_i + L_j  ->  alpha_i + ... + alpha_{j-1} + 2(alpha_j + ... + alpha_{n-1}) + alpha_n

F4 and G2 are small fixed tables.  `half_lengths[m-1]` is half the squared
length of alpha_m under the bilinear form normalization in which the pairing
of a simple root with its own fundamental weight equals that half length;
these are the factors the Duistermaat-Heckman densities are built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

RootVector = tuple[int, ...]

__all__ = [
    "RootSystem",
    "UnsupportedRootSystemError",
    "WeightExpr",
    "build_root_system",
    "cartan_matrix",
    "coroot_pairing",
    "rho_G",
    "root_to_weight",
    "weight_of_root_sum",
]


class UnsupportedRootSystemError(ValueError):
    """Raised for a (type, rank) pair outside B(n>=2), C(n>=2), F4, G2."""


class WeightExpr:
    """Sparse vector in the fundamental-weight basis, keyed by 1-based index."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Mapping[int, Fraction | int] | Iterable[tuple[int, Fraction | int]] = ()):
        items = coords.items() if isinstance(coords, Mapping) else coords
        self._coords = {m: Fraction(c) for m, c in items if c}

    @property
    def coords(self) -> dict[int, Fraction]:
        return dict(self._coords)

    def coefficient(self, m: int) -> Fraction:
        return self._coords.get(m, Fraction(0))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._coords)

    def __add__(self, other: "WeightExpr") -> "WeightExpr":
        if not isinstance(other, WeightExpr):
            return NotImplemented
        out = dict(self._coords)
        for m, c in other._coords.items():
            out[m] = out.get(m, Fraction(0)) + c
        return WeightExpr(out)

    def __sub__(self, other: "WeightExpr") -> "WeightExpr":
        if not isinstance(other, WeightExpr):
            return NotImplemented
        out = dict(self._coords)
        for m, c in other._coords.items():
            out[m] = out.get(m, Fraction(0)) - c
        return WeightExpr(out)

    def __mul__(self, scalar: Fraction | int) -> "WeightExpr":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return WeightExpr({m: c * scalar for m, c in self._coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightExpr):
            return self._coords == other._coords
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coords.items()))

    def __bool__(self) -> bool:
        return bool(self._coords)

    def __repr__(self) -> str:
        if not self._coords:
            return "WeightExpr(0)"
        parts = [f"{c}*w{m}" for m, c in sorted(self._coords.items())]
        return "WeightExpr(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class RootSystem:
    """Positive roots of an irreducible root system, in simple-root coordinates."""

    type_label: str
    rank: int
    positive_roots: tuple[RootVector, ...]
    half_lengths: tuple[Fraction, ...]


_G2_POSITIVE_ROOTS: tuple[RootVector, ...] = (
    (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2),
)

_F4_POSITIVE_ROOTS: tuple[RootVector, ...] = (
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1),
    (1, 1, 1, 0), (0, 1, 2, 0), (0, 1, 1, 1),
    (1, 1, 2, 0), (1, 1, 1, 1), (0, 1, 2, 1),
    (1, 2, 2, 0), (1, 1, 2, 1), (0, 1, 2, 2),
    (1, 2, 2, 1), (1, 1, 2, 2),
    (1, 2, 3, 1), (1, 2, 2, 2),
    (1, 2, 3, 2),
    (1, 2, 4, 2),
    (1, 3, 4, 2),
    (2, 3, 4, 2),
)

_HALF = Fraction(1, 2)


def _type_bc_roots(rank: int, long_last: bool) -> tuple[RootVector, ...]:
    """Positive roots of B_rank (long_last=False) or C_rank (long_last=True)."""
    n = rank
    roots: list[RootVector] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            # L_i - L_j
            v = [0] * n
            for m in range(i, j):
                v[m - 1] = 1
            roots.append(tuple(v))
            # L_i + L_j
            v = [0] * n
            for m in range(i, j):
                v[m - 1] = 1
            if long_last:
                for m in range(j, n):
                    v[m - 1] = 2
                v[n - 1] = 1
            else:
                for m in range(j, n + 1):
                    v[m - 1] = 2
            roots.append(tuple(v))
        # L_i for B, 2 L_i for C
        v = [0] * n
        if long_last:
            for m in range(i, n):
                v[m - 1] = 2
            v[n - 1] = 1
        else:
            for m in range(i, n + 1):
                v[m - 1] = 1
        roots.append(tuple(v))
    return tuple(roots)


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct the positive-root table for (type_label, rank).

    Supported pairs: ("B", n>=2), ("C", n>=2), ("F4", 4), ("G2", 2).
    """
    if type_label == "B" and rank >= 2:
        roots = _type_bc_roots(rank, long_last=False)
        half = (Fraction(1),) * (rank - 1) + (_HALF,)
    elif type_label == "C" and rank >= 2:
        roots = _type_bc_roots(rank, long_last=True)
        half = (Fraction(1),) * (rank - 1) + (Fraction(2),)
    elif type_label == "F4" and rank == 4:
        roots = _F4_POSITIVE_ROOTS
        half = (Fraction(1), Fraction(1), _HALF, _HALF)
    elif type_label == "G2" and rank == 2:
        roots = _G2_POSITIVE_ROOTS
        half = (_HALF, Fraction(3, 2))
    else:
        raise UnsupportedRootSystemError(
            f"unsupported root system ({type_label!r}, rank {rank})"
        )
    return RootSystem(type_label=type_label, rank=rank, positive_roots=roots, half_lengths=half)


def cartan_matrix(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Pairing matrix with entry [l][m] = <alpha_{l+1}^vee, alpha_{m+1}> (0-based rows/cols)."""
    n = rs.rank
    if rs.type_label == "F4":
        return ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))
    if rs.type_label == "G2":
        return ((2, -3), (-1, 2))
    rows = []
    for l in range(n):
        row = [0] * n
        row[l] = 2
        if l > 0:
            row[l - 1] = -1
        if l < n - 1:
            row[l + 1] = -1
        rows.append(row)
    if rs.type_label == "B":
        rows[n - 1][n - 2] = -2
    elif rs.type_label == "C":
        rows[n - 2][n - 1] = -2
    else:
        raise UnsupportedRootSystemError(f"unknown type label {rs.type_label!r}")
    return tuple(tuple(r) for r in rows)


def root_to_weight(rs: RootSystem, root: Iterable[int]) -> WeightExpr:
    """Convert a simple-root coefficient vector to fundamental-weight coordinates."""
    c = list(root)
    pairing = cartan_matrix(rs)
    return WeightExpr(
        {l + 1: sum(pairing[l][m] * c[m] for m in range(rs.rank)) for l in range(rs.rank)}
    )


def weight_of_root_sum(rs: RootSystem, roots: Iterable[RootVector]) -> WeightExpr:
    """Fundamental-weight coordinates of a sum of roots (summed before converting)."""
    total = [0] * rs.rank
    for root in roots:
        for m, c in enumerate(root):
            total[m] += c
    return root_to_weight(rs, total)


def rho_G(rs: RootSystem) -> WeightExpr:
    """Sum of all fundamental weights: coefficient one at every index."""
    return WeightExpr({m: 1 for m in range(1, rs.rank + 1)})


def coroot_pairing(rs: RootSystem, m: int, w: WeightExpr) -> Fraction:
    """<alpha_m^vee, w>: the coefficient of the m-th fundamental weight in w."""
    if not 1 <= m <= rs.rank:
        raise IndexError(f"simple-root index {m} out of range 1..{rs.rank}")
    return w.coefficient(m)
