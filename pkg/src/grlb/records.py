"""Serializable result records and their fixed JSON layout.

Fractions are rendered as "p/q" strings in JSON so consumers never lose
precision to floating point or fixed-width integers; the coefficients of
2*rho_P are small and are kept as explicit (index, numerator, denominator)
triples.  `record_to_json` is canonical: re-serializing a parsed record
reproduces the bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import closedforms, engine
from .engine import ComputationReport, HorosphericalDatum
from .exactnum import to_decimal

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION",
    "OutputRecord",
    "frac_str",
    "parse_frac",
    "record_for",
    "record_from_json",
    "record_to_csv_row",
    "record_to_json",
    "record_to_text",
    "CSV_HEADER",
]


def frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den))


@dataclass(frozen=True)
class OutputRecord:
    """One computed manifold, ready for text/JSON/CSV output."""

    family: str
    params: dict[str, int]
    dim: int
    two_rho_P: tuple[tuple[int, Fraction], ...]
    interval: tuple[Fraction, Fraction]
    barycenter_t: Fraction
    R: Fraction
    R_decimal: str
    provenance: str


def record_for(
    datum: HorosphericalDatum,
    digits: int = 4,
    route: str = "engine",
) -> OutputRecord:
    """Build a record from the exact pipeline.

    route "closed-form" recomputes R from the family's integral formula
    (X1 and X3 only); everything else always comes from the engine.
    """
    rep: ComputationReport = engine.report(datum)
    r_value = rep.R
    if route == "closed-form":
        if datum.family == "X1":
            r_value = closedforms.r_x1_formula(datum.n)
        elif datum.family == "X3":
            r_value = closedforms.r_x3_formula(datum.n, datum.k)
        else:
            raise ValueError("closed-form route exists only for families X1 and X3")
    elif route != "engine":
        raise ValueError(f"unknown route {route!r}")
    seg = rep.segment
    coords = seg.two_rho_P.coords
    return OutputRecord(
        family=datum.family,
        params=datum.params,
        dim=rep.dimension,
        two_rho_P=tuple(sorted(coords.items())),
        interval=(seg.a, seg.b),
        barycenter_t=rep.barycenter_t,
        R=r_value,
        R_decimal=to_decimal(r_value, digits),
        provenance=route,
    )


def _record_dict(rec: OutputRecord) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "family": rec.family,
        "params": rec.params,
        "dim": rec.dim,
        "two_rho_P": [[m, c.numerator, c.denominator] for m, c in rec.two_rho_P],
        "interval": [frac_str(rec.interval[0]), frac_str(rec.interval[1])],
        "barycenter_t": frac_str(rec.barycenter_t),
        "R": frac_str(rec.R),
        "R_decimal": rec.R_decimal,
        "provenance": rec.provenance,
    }


def record_to_json(rec: OutputRecord) -> str:
    return json.dumps(_record_dict(rec), indent=2)


def record_from_json(text: str) -> OutputRecord:
    data = json.loads(text)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
    return OutputRecord(
        family=data["family"],
        params={k: int(v) for k, v in data["params"].items()},
        dim=int(data["dim"]),
        two_rho_P=tuple((int(m), Fraction(int(p), int(q))) for m, p, q in data["two_rho_P"]),
        interval=(parse_frac(data["interval"][0]), parse_frac(data["interval"][1])),
        barycenter_t=parse_frac(data["barycenter_t"]),
        R=parse_frac(data["R"]),
        R_decimal=data["R_decimal"],
        provenance=data["provenance"],
    )


def record_to_text(rec: OutputRecord) -> str:
    params = ", ".join(f"{k}={v}" for k, v in rec.params.items()) or "-"
    rho = " + ".join(f"({frac_str(c)})*w{m}" for m, c in rec.two_rho_P)
    lines = [
        f"family        {rec.family}",
        f"params        {params}",
        f"dim           {rec.dim}",
        f"2*rho_P       {rho}",
        f"interval      t in [-{frac_str(rec.interval[0])}, {frac_str(rec.interval[1])}]",
        f"barycenter_t  {frac_str(rec.barycenter_t)}",
        f"R             {frac_str(rec.R)}",
        f"R_decimal     {rec.R_decimal}",
        f"provenance    {rec.provenance}",
    ]
    return "\n".join(lines)


CSV_HEADER = "family,n,k,dim,R"


def record_to_csv_row(rec: OutputRecord) -> str:
    n = rec.params.get("n", "")
    k = rec.params.get("k", "")
    return f"{rec.family},{n},{k},{rec.dim},{rec.R_decimal}"
