"""Floating-point verification oracle for the exact pipeline.

`quad` is a composite Simpson integrator driven by interval halving: the
trapezoid sum is refined by doubling the panel count (only new midpoints are
evaluated) and the Simpson value is extrapolated from consecutive trapezoid
sums.  Integrands are black-box vectorized callables over numpy arrays, so
none of the exact antiderivative code is exercised here.

`crosscheck` rebuilds a datum's Duistermaat-Heckman density in *factored*
form, evaluates it pointwise (switching to log-domain accumulation once the
factor count makes direct products overflow-prone), and compares the
quadrature barycenter and Ricci bound against the exact engine values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import engine
from .engine import HorosphericalDatum

__all__ = [
    "CrosscheckReport",
    "EvaluationFailureError",
    "NoConvergenceError",
    "QuadratureResult",
    "crosscheck",
    "dh_density_evaluator",
    "quad",
]

#: Above this factor count the density is accumulated as sum of logs.
LOG_DOMAIN_THRESHOLD = 40

#: crosscheck refuses larger n: the factored density leaves double range.
CROSSCHECK_MAX_N = 20

_CHUNK = 1 << 20


class EvaluationFailureError(RuntimeError):
    """The integrand returned a non-finite value."""


class NoConvergenceError(RuntimeError):
    """Refinement hit the level cap; `.best` holds the last estimate."""

    def __init__(self, message: str, best: "QuadratureResult"):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class QuadratureResult:
    estimate: float
    error_estimate: float
    refinement_levels: int


def _midpoint_sum(f: Callable[[np.ndarray], np.ndarray], lo: float, step: float, count: int) -> float:
    """Sum of f at the `count` points lo + step/2 + m*step, evaluated in chunks."""
    total = 0.0
    start = lo + step / 2.0
    for offset in range(0, count, _CHUNK):
        stop = min(offset + _CHUNK, count)
        xs = start + step * np.arange(offset, stop, dtype=float)
        vals = np.asarray(f(xs), dtype=float)
        if not np.all(np.isfinite(vals)):
            raise EvaluationFailureError("integrand returned a non-finite value")
        total += float(np.sum(vals))
    return total


def quad(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    rel_tol: float = 1e-9,
    max_levels: int = 30,
) -> QuadratureResult:
    """Composite Simpson estimate of the integral of f over [lo, hi].

    f must map a numpy array of sample points to the array of values.  The
    panel count doubles per level until two successive Simpson values agree
    to rel_tol (relatively, with an absolute fallback at zero), and the level
    cap raises NoConvergenceError carrying the best estimate.
    """
    if not lo < hi:
        raise ValueError(f"quad requires lo < hi, got [{lo}, {hi}]")
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    if max_levels < 2:
        raise ValueError("max_levels must be at least 2")
    ends = np.asarray(f(np.array([lo, hi], dtype=float)), dtype=float)
    if not np.all(np.isfinite(ends)):
        raise EvaluationFailureError("integrand returned a non-finite value")
    width = hi - lo
    trap = 0.5 * width * float(ends[0] + ends[1])
    simpson_prev: float | None = None
    diff = float("inf")
    for level in range(1, max_levels + 1):
        step = width / (1 << (level - 1))
        mid = _midpoint_sum(f, lo, step, 1 << (level - 1))
        trap_next = 0.5 * trap + 0.5 * step * mid
        simpson = (4.0 * trap_next - trap) / 3.0
        if simpson_prev is not None:
            diff = abs(simpson - simpson_prev)
            scale = abs(simpson)
            if diff <= rel_tol * scale or (scale == 0.0 and diff <= rel_tol):
                return QuadratureResult(simpson, diff, level)
        simpson_prev = simpson
        trap = trap_next
    best = QuadratureResult(simpson, diff, max_levels)
    raise NoConvergenceError(
        f"no convergence within {max_levels} halvings (last estimate {simpson!r})", best
    )


def dh_density_evaluator(datum: HorosphericalDatum) -> tuple[Callable[[np.ndarray], np.ndarray], float, float]:
    """Vectorized factored evaluator for the datum's density, plus (a, b).

    Every linear factor is kept unexpanded; with many factors the product is
    accumulated as sum of logs to stay inside double range.
    """
    rs, _, _ = engine.resolve(datum)
    seg = engine.moment_segment(datum)
    d_i = rs.half_lengths[seg.i - 1]
    d_j = rs.half_lengths[seg.j - 1]
    pairs = [
        (float(root[seg.i - 1] * d_i), float(root[seg.j - 1] * d_j))
        for root in engine.phi_pu(rs, seg.i, seg.j)
    ]
    a, b = float(seg.a), float(seg.b)
    use_logs = len(pairs) > LOG_DOMAIN_THRESHOLD

    def density(ts: np.ndarray) -> np.ndarray:
        u = a + ts
        v = b - ts
        if not use_logs:
            out = np.ones_like(ts)
            for p, q in pairs:
                out = out * (p * u + q * v)
            return out
        log_acc = np.zeros_like(ts)
        sign = np.ones_like(ts)
        zero = np.zeros_like(ts, dtype=bool)
        with np.errstate(divide="ignore"):
            for p, q in pairs:
                w = p * u + q * v
                zero |= w == 0.0
                sign = sign * np.sign(w)
                log_acc = log_acc + np.log(np.abs(w))
        out = sign * np.exp(log_acc)
        out[zero] = 0.0
        return out

    return density, a, b


@dataclass(frozen=True)
class CrosscheckReport:
    datum: HorosphericalDatum
    t_bar_exact: float
    t_bar_quad: float
    r_exact: float
    r_quad: float
    t_bar_rel_err: float
    r_rel_err: float
    ok: bool


def crosscheck(datum: HorosphericalDatum, rel_tol: float = 1e-9) -> CrosscheckReport:
    """Quadrature recomputation of tbar and R versus the exact engine values.

    The inner quadrature runs three decades tighter than the requested
    comparison tolerance.  Parameters are capped at n <= CROSSCHECK_MAX_N.
    """
    if datum.n is not None and datum.n > CROSSCHECK_MAX_N:
        raise ValueError(
            f"crosscheck supports n <= {CROSSCHECK_MAX_N}; "
            "larger densities overflow pointwise evaluation"
        )
    density, a, b = dh_density_evaluator(datum)
    inner_tol = max(rel_tol * 1e-3, 1e-13)
    volume = quad(density, -a, b, inner_tol)
    first = quad(lambda ts: ts * density(ts), -a, b, inner_tol)
    t_bar_quad = first.estimate / volume.estimate
    if t_bar_quad > 0:
        r_quad = a / (a + t_bar_quad)
    elif t_bar_quad < 0:
        r_quad = b / (b - t_bar_quad)
    else:
        r_quad = 1.0

    exact = engine.report(datum)
    t_bar_exact = float(exact.barycenter_t)
    r_exact = float(exact.R)
    t_err = abs(t_bar_quad - t_bar_exact) / (abs(t_bar_exact) or 1.0)
    r_err = abs(r_quad - r_exact) / r_exact
    return CrosscheckReport(
        datum=datum,
        t_bar_exact=t_bar_exact,
        t_bar_quad=t_bar_quad,
        r_exact=r_exact,
        r_quad=r_quad,
        t_bar_rel_err=t_err,
        r_rel_err=r_err,
        ok=bool(t_err <= rel_tol and r_err <= rel_tol),
    )
