"""Floating-point quadrature of the two Laplace-transform integrals.

The transform E[exp(-s * max of n unit exponentials)] has two integral
representations:

  distribution route:  s * integral_0^inf (1 - e^-t)^n e^-st dt
  density route:       n * integral_0^1  (1 - w)^s w^(n-1) dw
                       (t -> w = 1 - e^-t), equal to n*B(s+1, n)

Both are integrated with an adaptive Simpson rule carrying an explicit
error estimate, and are meant to be cross-checked against the exact
rational value from :mod:`binomax.identities`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import NonPositiveS, NRequired, ToleranceNotMet
from .exact import check_natural

#: Tolerances below this are rejected: the error estimator itself works in
#: float64 and cannot certify anything tighter.
TOLERANCE_FLOOR = 1e-13

_MAX_DEPTH = 60


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    estimated_error: float
    evaluations: int


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not tol >= TOLERANCE_FLOOR:
        raise ValueError(f"tol must be >= {TOLERANCE_FLOOR:g}, got {tol:g}")
    return tol


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    max_depth: int = _MAX_DEPTH,
    min_depth: int = 4,
) -> QuadratureResult:
    """Adaptive Simpson integration of f over [a, b] to absolute tolerance.

    Each subinterval is accepted when the Richardson error estimate
    |S2 - S1|/15 falls under its share of the tolerance (halved per
    split), so accepted-leaf error estimates sum to at most ``tol``.
    No interval is accepted above ``min_depth`` subdivisions: a coarse
    first look can sit entirely off a narrow peak and report a tiny
    error for a wrong value, so the estimator must see at least
    2^min_depth panels first.  Raises :class:`ToleranceNotMet` once an
    interval still fails its tolerance at ``max_depth`` subdivisions.
    """
    count = 0

    def ev(x: float) -> float:
        nonlocal count
        count += 1
        return f(x)

    def simpson(lo: float, flo: float, mid: float, fmid: float, hi: float, fhi: float) -> float:
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def refine(
        lo: float,
        flo: float,
        mid: float,
        fmid: float,
        hi: float,
        fhi: float,
        whole: float,
        budget: float,
        depth: int,
    ) -> tuple[float, float]:
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = ev(lm)
        frm = ev(rm)
        left = simpson(lo, flo, lm, flm, mid, fmid)
        right = simpson(mid, fmid, rm, frm, hi, fhi)
        err = (left + right - whole) / 15.0
        if depth >= min_depth and abs(err) <= budget:
            return left + right + err, abs(err)
        if depth >= max_depth:
            raise ToleranceNotMet(
                f"interval [{lo:g}, {hi:g}] still above tolerance after "
                f"{max_depth} subdivisions"
            )
        lv, le = refine(lo, flo, lm, flm, mid, fmid, left, budget / 2.0, depth + 1)
        rv, re = refine(mid, fmid, rm, frm, hi, fhi, right, budget / 2.0, depth + 1)
        return lv + rv, le + re

    if a == b:
        ev(a)
        return QuadratureResult(0.0, 0.0, count)
    fa = ev(a)
    fb = ev(b)
    mid = 0.5 * (a + b)
    fmid = ev(mid)
    whole = simpson(a, fa, mid, fmid, b, fb)
    value, err = refine(a, fa, mid, fmid, b, fb, whole, float(tol), 0)
    return QuadratureResult(value, err, count)


def laplace_via_cdf_quadrature(s: float, n: int, tol: float) -> QuadratureResult:
    """Transform of the max via the distribution-function integral.

    The infinite domain is truncated at T = ln(2/tol)/s, where the
    remaining tail is bounded by e^(-sT) < tol/2; the finite part is
    integrated to tol/2, so the estimated error stays <= tol.
    """
    s = float(s)
    if s <= 0:
        raise NonPositiveS(f"s must be > 0, got {s!r}")
    check_natural(n, "n")
    tol = _check_tol(tol)
    cutoff = math.log(2.0 / tol) / s

    def integrand(t: float) -> float:
        return s * (1.0 - math.exp(-t)) ** n * math.exp(-s * t)

    base = adaptive_simpson(integrand, 0.0, cutoff, tol / 2.0)
    tail_bound = math.exp(-s * cutoff)
    return QuadratureResult(
        base.value, base.estimated_error + tail_bound, base.evaluations
    )


def laplace_via_density_quadrature(s: float, n: int, tol: float) -> QuadratureResult:
    """Transform of the max via the density integral, in substituted form.

    Works on n * integral_0^1 (1-w)^s w^(n-1) dw: the substitution trades
    the infinite domain for [0, 1], and for s > 0, n >= 1 the integrand
    is continuous there, including both endpoints.
    """
    s = float(s)
    if s <= 0:
        raise NonPositiveS(f"s must be > 0, got {s!r}")
    check_natural(n, "n")
    if n == 0:
        raise NRequired("the density route requires n >= 1")
    tol = _check_tol(tol)

    def integrand(w: float) -> float:
        return n * (1.0 - w) ** s * w ** (n - 1)

    # Continuity on [0, 1]: w=0 gives n*1*0^(n-1) (finite, = n when n=1),
    # w=1 gives 0 for s > 0.
    assert math.isfinite(integrand(0.0)) and math.isfinite(integrand(1.0))
    return adaptive_simpson(integrand, 0.0, 1.0, tol)
