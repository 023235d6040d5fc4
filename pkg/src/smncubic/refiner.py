"""Root refinement inside issued isolation intervals and the assembled report."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .classifier import (
    DEFAULT_BOUNDARY_TOL,
    FLAG_C0,
    FLAG_C1,
    FLAG_C2,
    Classification,
    IsolationSet,
    boundary_band,
    classify,
    isolation_intervals,
)
from .core import DomainError, MonicCubic, balanced_roots, cbrt, evaluate, extreme_roots

DEFAULT_TOL = 1e-14
RESIDUAL_TARGET = 1e-10


class BracketError(ValueError):
    """The interval neither changes sign nor touches a root at an endpoint."""


@dataclass(frozen=True)
class Root:
    value: float
    multiplicity: int
    residual: float


@dataclass(frozen=True)
class RootReport:
    cubic: MonicCubic
    classification: Classification
    isolation: IsolationSet
    roots: List[Root]
    complex_pair_present: bool
    vieta_residuals: Tuple[float, float, float]
    complex_pair: Optional[Tuple[float, float]] = None

    def real_roots_expanded(self) -> List[float]:
        """Real roots repeated by multiplicity, largest first."""
        out = []
        for root in self.roots:
            out.extend([root.value] * root.multiplicity)
        return sorted(out, reverse=True)


def residual_tolerance(p: MonicCubic, x: float) -> float:
    return RESIDUAL_TARGET * p.scale * max(1.0, abs(x)) ** 3


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def _check_bracket(p: MonicCubic, lo: float, hi: float):
    """Return (f(lo), f(hi), endpoint) where endpoint is set if it already is the root."""
    if not lo <= hi:
        raise BracketError(f"empty bracket [{lo!r}, {hi!r}]")
    flo, fhi = evaluate(p, lo), evaluate(p, hi)
    if flo == 0.0:
        return flo, fhi, lo
    if fhi == 0.0:
        return flo, fhi, hi
    if _sign(flo) != _sign(fhi):
        return flo, fhi, None
    # tangency at an endpoint, or a root pushed just outside by rounding
    x, fx = (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)
    if abs(fx) <= residual_tolerance(p, x):
        return flo, fhi, x
    raise BracketError(
        f"no sign change on [{lo!r}, {hi!r}]: p(lo) = {flo!r}, p(hi) = {fhi!r}"
    )


def max_iterations(lo: float, hi: float, tol: float) -> int:
    if hi <= lo:
        return 2
    return math.ceil(math.log2((hi - lo) / tol)) + 2


def bisect(p: MonicCubic, lo: float, hi: float, tol: float = DEFAULT_TOL) -> float:
    flo, fhi, endpoint = _check_bracket(p, lo, hi)
    if endpoint is not None:
        return endpoint
    slo = _sign(flo)
    for _ in range(max_iterations(lo, hi, tol)):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol * max(1.0, abs(mid)) or mid in (lo, hi):
            return mid
        fmid = evaluate(p, mid)
        if fmid == 0.0:
            return mid
        if _sign(fmid) == slo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def newton_refine(
    p: MonicCubic, seed: float, lo: float, hi: float, tol: float = DEFAULT_TOL
) -> float:
    """Newton iteration kept inside [lo, hi]; bisects whenever a step escapes or stalls."""
    flo, fhi, endpoint = _check_bracket(p, lo, hi)
    if endpoint is not None:
        return endpoint
    left, right = lo, hi

    def inside(x: float) -> float:
        # a last step that cancels to within rounding may land just outside
        return min(max(x, left), right)

    if flo > 0:
        lo, hi = hi, lo  # orient so p(lo) < 0 < p(hi)
    x = inside(seed)
    dx_old = dx = abs(hi - lo)
    flat = 1e-14 * p.scale
    fx, dfx = evaluate(p, x), p.derivative(x)
    for _ in range(max_iterations(left, right, tol)):
        if fx == 0.0:
            return x
        newton_escapes = ((x - hi) * dfx - fx) * ((x - lo) * dfx - fx) > 0
        if abs(dfx) < flat or newton_escapes or abs(2.0 * fx) > abs(dx_old * dfx):
            dx_old, dx = dx, 0.5 * (hi - lo)
            x = lo + dx
        else:
            dx_old, dx = dx, fx / dfx
            x -= dx
        if abs(dx) <= tol * max(1.0, abs(x)):
            return inside(x)
        fx, dfx = evaluate(p, x), p.derivative(x)
        if fx < 0:
            lo = x
        else:
            hi = x
    return inside(x)


def closed_form_b_boundary(p: MonicCubic, tol: float = DEFAULT_BOUNDARY_TOL) -> float:
    """Real root of a cubic with b = a^2/3 by completing the cube."""
    a, b, c = p.a, p.b, p.c
    if abs(b - a * a / 3.0) > boundary_band(p, tol):
        raise DomainError(f"closed form needs b = a^2/3, got b = {b!r}, a^2/3 = {a * a / 3.0!r}")
    return -a / 3.0 + cbrt(a ** 3 / 27.0 - c)


def _vieta(p: MonicCubic, values: List[complex]) -> Tuple[float, float, float]:
    x1, x2, x3 = values
    e1 = (x1 + x2 + x3) + p.a
    e2 = (x1 * x2 + x1 * x3 + x2 * x3) - p.b
    e3 = (x1 * x2 * x3) + p.c
    return (abs(e1), abs(e2), abs(e3))


def boundary_roots(p: MonicCubic, cls: Classification) -> Optional[List[float]]:
    """Roots of the boundary cubic a flagged classification stands for, aligned
    with its isolation intervals; None when no c-boundary flag is set."""
    flags = cls.boundary_flags
    if FLAG_C0 in flags:
        return list(balanced_roots(p.a, p.b))
    if FLAG_C1 in flags:
        (mu1, xi1), _ = extreme_roots(p.a, p.b)
        return [mu1, xi1]
    if FLAG_C2 in flags:
        _, (mu2, xi2) = extreme_roots(p.a, p.b)
        return [xi2, mu2]
    return None


def solve(
    p: MonicCubic,
    tol: float = DEFAULT_TOL,
    boundary_tol: float = DEFAULT_BOUNDARY_TOL,
) -> RootReport:
    cls = classify(p, boundary_tol)
    iso = isolation_intervals(p, boundary_tol, classification=cls)

    exact = boundary_roots(p, cls)
    roots = []
    for k, interval in enumerate(iso):
        if exact is not None:
            x = exact[k]
        elif interval.multiplicity > 1 or interval.lo == interval.hi:
            # the triple root and the b = a^2/3 closed form need no refinement
            x = interval.lo
        else:
            x = newton_refine(p, 0.5 * (interval.lo + interval.hi), interval.lo, interval.hi, tol)
        roots.append(Root(x, interval.multiplicity, abs(evaluate(p, x))))

    complex_pair = None
    if cls.case.real_root_count == 1:
        from .oracle import cardano_roots, deflated_pair

        complex_pair = cardano_roots(p).complex_pair
        if complex_pair is None:  # closed form saw a repeated root inside the band
            complex_pair = deflated_pair(p.a, p.b, roots[0].value)
        re, im = complex_pair
        values = [roots[0].value, complex(re, im), complex(re, -im)]
    else:
        values = [r for root in roots for r in [root.value] * root.multiplicity]

    return RootReport(
        cubic=p,
        classification=cls,
        isolation=iso,
        roots=roots,
        complex_pair_present=complex_pair is not None,
        vieta_residuals=_vieta(p, values),
        complex_pair=complex_pair,
    )
