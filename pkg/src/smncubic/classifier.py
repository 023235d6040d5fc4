"""Case taxonomy of the monic cubic and the isolation intervals it implies.

The analysis starts from b relative to a^2/3:

* b < a^2/3: stationary points exist and c is placed against the envelope
  c2 <= c0 <= c1 (three real roots on [c2, c1], one outside it);
* b = a^2/3: the cubic is a shifted cube plus a constant;
* b > a^2/3: one real root, bracketed by sign rules on a and c.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional

from .core import MonicCubic, balanced_roots, cbrt, envelope, extreme_roots

DEFAULT_BOUNDARY_TOL = 1e-12

FLAG_C0 = "c=c0"
FLAG_C1 = "c=c1"
FLAG_C2 = "c=c2"
FLAG_B = "b=a^2/3"


class Case(enum.Enum):
    THREE_REAL_LOWER_ARC = "ThreeRealLowerArc"
    THREE_REAL_UPPER_ARC = "ThreeRealUpperArc"
    ONE_REAL_BELOW_ENVELOPE = "OneRealBelowEnvelope"
    ONE_REAL_ABOVE_ENVELOPE = "OneRealAboveEnvelope"
    TRIPLE_ROOT = "TripleRoot"
    ONE_REAL_INFLECTED = "OneRealInflected"
    ONE_REAL_NO_CRITICAL = "OneRealNoCritical"

    @property
    def real_root_count(self) -> int:
        """Real roots counted with multiplicity."""
        if self in (Case.THREE_REAL_LOWER_ARC, Case.THREE_REAL_UPPER_ARC, Case.TRIPLE_ROOT):
            return 3
        return 1

    @property
    def has_triangle(self) -> bool:
        return self in (Case.THREE_REAL_LOWER_ARC, Case.THREE_REAL_UPPER_ARC)


class Subcase(enum.Enum):
    I = "I"      # a >= 0, c <= 0
    II = "II"    # a >= 0, c > 0
    III = "III"  # a < 0, c < 0
    IV = "IV"    # a < 0, c >= 0


@dataclass(frozen=True)
class Classification:
    case: Case
    subcase: Optional[Subcase] = None
    boundary_flags: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if (self.subcase is None) == (self.case is Case.ONE_REAL_NO_CRITICAL):
            raise ValueError("subcase is required exactly for OneRealNoCritical")


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    multiplicity: int = 1

    def __contains__(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class IsolationSet:
    # ordered by the root they isolate, largest root first
    intervals: List[Interval]

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)


@dataclass(frozen=True)
class Bounds:
    upper: float
    lower: float
    method: str


def boundary_band(p: MonicCubic, tol: float = DEFAULT_BOUNDARY_TOL) -> float:
    a, b, c = p.a, p.b, p.c
    return tol * max(1.0, abs(a) ** 3 + abs(b) * abs(a) + abs(c))


def classify(p: MonicCubic, tol: float = DEFAULT_BOUNDARY_TOL) -> Classification:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    a, b, c = p.a, p.b, p.c
    band = boundary_band(p, tol)

    excess = b - a * a / 3.0
    if abs(excess) <= band:
        flags = frozenset({FLAG_B})
        if abs(c - a ** 3 / 27.0) <= band:
            return Classification(Case.TRIPLE_ROOT, boundary_flags=flags)
        return Classification(Case.ONE_REAL_INFLECTED, boundary_flags=flags)

    if excess > 0:
        if a >= 0:
            sub = Subcase.I if c <= 0 else Subcase.II
        else:
            sub = Subcase.III if c < 0 else Subcase.IV
        return Classification(Case.ONE_REAL_NO_CRITICAL, subcase=sub)

    env = envelope(a, b)
    hits = sorted(
        (abs(c - edge), flag)
        for edge, flag in ((env.c0, FLAG_C0), (env.c1, FLAG_C1), (env.c2, FLAG_C2))
        if abs(c - edge) <= band
    )
    if hits:
        flag = hits[0][1]
        case = Case.THREE_REAL_UPPER_ARC if flag == FLAG_C1 else Case.THREE_REAL_LOWER_ARC
        return Classification(case, boundary_flags=frozenset({flag}))
    if c < env.c2:
        return Classification(Case.ONE_REAL_BELOW_ENVELOPE)
    if c > env.c1:
        return Classification(Case.ONE_REAL_ABOVE_ENVELOPE)
    if c < env.c0:
        return Classification(Case.THREE_REAL_LOWER_ARC)
    return Classification(Case.THREE_REAL_UPPER_ARC)


def upper_bound_negcoeff(p: MonicCubic) -> float:
    """max(1, sum of |negative coefficients|)."""
    return max(1.0, sum(-x for x in (p.a, p.b, p.c) if x < 0))


def upper_bound_kuniyeda(p: MonicCubic) -> float:
    """1 + H**(1/k), H the largest |negative coefficient|.

    k is 1 for a < 0, 2 for a > 0 > b, 3 for a > 0, b > 0 > c; every other
    sign pattern uses k = 1.  All-positive coefficients give 0.
    """
    a, b, c = p.a, p.b, p.c
    negatives = [-x for x in (a, b, c) if x < 0]
    if not negatives:
        return 0.0 if min(a, b, c) > 0 else 1.0
    if a > 0 and b < 0:
        k = 2
    elif a > 0 and b > 0 and c < 0:
        k = 3
    else:
        k = 1
    return 1.0 + max(negatives) ** (1.0 / k)


UPPER_BOUNDS = {
    "neg-coeff-sum": upper_bound_negcoeff,
    "kuniyeda": upper_bound_kuniyeda,
}


def upper_bound(p: MonicCubic, method: str = "kuniyeda") -> float:
    try:
        rule = UPPER_BOUNDS[method]
    except KeyError:
        raise ValueError(f"unknown bound method {method!r}; expected one of {sorted(UPPER_BOUNDS)}")
    return rule(p)


def lower_bound(p: MonicCubic, method: str = "kuniyeda") -> float:
    # upper bound of p(-x), normalised to x^3 - a x^2 + b x - c, negated
    return -upper_bound(p.reflected(), method)


def bounds(p: MonicCubic, method: str = "kuniyeda") -> Bounds:
    return Bounds(upper=upper_bound(p, method), lower=lower_bound(p, method), method=method)


def isolation_intervals(
    p: MonicCubic,
    tol: float = DEFAULT_BOUNDARY_TOL,
    classification: Optional[Classification] = None,
) -> IsolationSet:
    cls = classify(p, tol) if classification is None else classification
    a, b, c = p.a, p.b, p.c
    case = cls.case
    phi = -a / 3.0

    if case is Case.TRIPLE_ROOT:
        return IsolationSet([Interval(phi, phi, 3)])

    if case is Case.ONE_REAL_INFLECTED:
        x = phi + cbrt(a ** 3 / 27.0 - c)
        return IsolationSet([Interval(x, x)])

    if case is Case.ONE_REAL_NO_CRITICAL:
        ratio = -c / b
        if cls.subcase is Subcase.I:
            lo, hi = 0.0, ratio
        elif cls.subcase is Subcase.IV:
            lo, hi = ratio, 0.0
        else:
            lo, hi = min(-a, ratio), max(-a, ratio)
        return IsolationSet([Interval(lo, hi)])

    (mu1, xi1), (mu2, xi2) = extreme_roots(a, b)

    if case is Case.ONE_REAL_BELOW_ENVELOPE:
        # x1 > xi2, capped by the tighter of the two upper bounds
        hi = min(upper_bound_negcoeff(p), upper_bound_kuniyeda(p))
        return IsolationSet([Interval(xi2, hi)])

    if case is Case.ONE_REAL_ABOVE_ENVELOPE:
        lo = max(lower_bound(p, "neg-coeff-sum"), lower_bound(p, "kuniyeda"))
        return IsolationSet([Interval(lo, xi1)])

    nu1, _, nu3 = balanced_roots(a, b)
    flags = cls.boundary_flags
    if case is Case.THREE_REAL_LOWER_ARC:
        if FLAG_C2 in flags:
            return IsolationSet([Interval(nu1, xi2), Interval(mu2, mu2, 2)])
        return IsolationSet([Interval(nu1, xi2), Interval(mu2, phi), Interval(nu3, mu2)])

    if FLAG_C1 in flags:
        return IsolationSet([Interval(mu1, mu1, 2), Interval(xi1, nu3)])
    return IsolationSet([Interval(mu1, nu1), Interval(phi, mu1), Interval(xi1, nu3)])


def root_spread_limits(a: float, b: float) -> tuple:
    """(3r, alpha): the range the spread x1 - x3 of a three-real-root cubic falls in."""
    (mu1, _), (mu2, _) = extreme_roots(a, b)
    r = (mu1 - mu2) / 2.0
    return (3.0 * r, 2.0 * math.sqrt(3.0) * r)
