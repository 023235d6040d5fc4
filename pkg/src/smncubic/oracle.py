"""Independent ground truth for the classifier and refiner.

Nothing in here touches the envelope or the triangle formulas: roots come from
a plain sign scan plus bisection, and from the textbook Cardano/trigonometric
closed forms.  Agreement between these and ``refiner.solve`` is therefore
evidence, not a restatement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .core import MonicCubic

GRID_POINTS = 10_000
TANGENCY_TOL = 1e-9
# stationary points closer than this (relative to a^2) are one inflection point
MERGE_BAND = 1e-12
CARDANO_BAND = 1e-12


@dataclass(frozen=True)
class OracleResult:
    real_roots: List[Tuple[float, int]]  # ascending (value, multiplicity)
    complex_pair: Optional[Tuple[float, float]] = None  # (re, im), im > 0

    @property
    def real_count(self) -> int:
        return sum(m for _, m in self.real_roots)

    def expanded(self) -> List[float]:
        """Real roots repeated by multiplicity, largest first."""
        return sorted((x for x, m in self.real_roots for _ in range(m)), reverse=True)


def _horner(a, b, c, x):
    return ((x + a) * x + b) * x + c


def _magnitude(a, b, c, x) -> float:
    ax = abs(x)
    return max(1.0, ax ** 3 + abs(a) * ax * ax + abs(b) * ax + abs(c))


def _stationary_points(a: float, b: float) -> List[float]:
    # roots of 3x^2 + 2ax + b, via the cancellation-free quadratic formula
    disc = a * a - 3.0 * b
    band = MERGE_BAND * max(1.0, a * a)
    if disc < -band:
        return []
    if disc <= band:
        return [-a / 3.0]
    q = -(a + math.copysign(math.sqrt(disc), a))
    return sorted((q / 3.0, b / q))


def _bisect(a, b, c, lo, hi, flo):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = _horner(a, b, c, mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _scan(a, b, c, segments: List[Tuple[float, float]], grid: int) -> List[float]:
    total = sum(hi - lo for lo, hi in segments) or 1.0
    found: List[float] = []
    for lo, hi in segments:
        n = max(2, int(round(grid * (hi - lo) / total)))
        xs = np.linspace(lo, hi, n)
        fs = _horner(a, b, c, xs)
        for i in np.flatnonzero(fs == 0.0):
            found.append(float(xs[i]))
        # compare signs, not products: tiny neighbouring values underflow to zero
        signs = np.sign(fs)
        flips = np.flatnonzero(signs[:-1] * signs[1:] < 0.0)
        for i in flips:
            found.append(_bisect(a, b, c, float(xs[i]), float(xs[i + 1]), float(fs[i])))
    found.sort()
    deduped: List[float] = []
    for x in found:
        if not deduped or x != deduped[-1]:
            deduped.append(x)
    return deduped


def deflated_pair(a, b, x1) -> Tuple[float, float]:
    # p(x) = (x - x1)(x^2 + (a + x1) x + (b + a x1 + x1^2)) + p(x1)
    lin = a + x1
    const = b + x1 * lin
    re = -lin / 2.0
    return (re, math.sqrt(max(0.0, const - re * re)))


def stationary_margin(p: MonicCubic) -> float:
    """Smallest |p(s)| / magnitude over stationary points s (inf if there are none).

    Below TANGENCY_TOL the oracle reports a repeated root; a margin that is
    small but nonzero means the true roots are split by roughly sqrt(margin),
    which the oracle cannot resolve.
    """
    a, b, c = p.a, p.b, p.c
    return min(
        (abs(_horner(a, b, c, s)) / _magnitude(a, b, c, s) for s in _stationary_points(a, b)),
        default=math.inf,
    )


def oracle_roots(p: MonicCubic, grid: int = GRID_POINTS) -> OracleResult:
    a, b, c = p.a, p.b, p.c
    radius = 1.0 + max(abs(a), abs(b), abs(c))  # Cauchy bound
    lo, hi = -radius - 1.0, radius + 1.0

    def tangent(s):
        return abs(_horner(a, b, c, s)) <= TANGENCY_TOL * _magnitude(a, b, c, s)

    stationary = _stationary_points(a, b)
    touching = [s for s in stationary if tangent(s)]

    if len(stationary) == 1 and touching:
        return OracleResult([(stationary[0], 3)])
    if len(stationary) == 2 and len(touching) == 2:
        return OracleResult([(0.5 * (stationary[0] + stationary[1]), 3)])
    if touching:
        s_max, s_min = stationary  # local maximum left of local minimum
        double = touching[0]
        if double == s_min:
            simple = _scan(a, b, c, [(lo, s_max)], grid)
        else:
            simple = _scan(a, b, c, [(s_min, hi)], grid)
        roots = sorted([(double, 2)] + [(x, 1) for x in simple])
    else:
        edges = [lo] + [s for s in stationary if lo < s < hi] + [hi]
        segments = list(zip(edges[:-1], edges[1:]))
        roots = [(x, 1) for x in _scan(a, b, c, segments, grid)]

    pair = None
    if sum(m for _, m in roots) == 1:
        pair = deflated_pair(a, b, roots[0][0])
    return OracleResult(roots, pair)


def cardano_roots(p: MonicCubic) -> OracleResult:
    """Closed form: trigonometric method for three real roots, Cardano otherwise."""
    a, b, c = p.a, p.b, p.c
    shift = a / 3.0
    # depressed cubic t^3 + P t + Q with x = t - a/3
    P = b - a * a / 3.0
    Q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c

    if abs(P) <= CARDANO_BAND * max(1.0, a * a, abs(b)) and abs(Q) <= CARDANO_BAND * max(
        1.0, abs(a) ** 3, abs(a * b), abs(c)
    ):
        return OracleResult([(-shift, 3)])

    magnitude = 4.0 * abs(P) ** 3 + 27.0 * Q * Q
    D = -(4.0 * P ** 3 + 27.0 * Q * Q)
    if abs(D) <= CARDANO_BAND * magnitude and P < 0:
        simple = 3.0 * Q / P - shift
        double = -1.5 * Q / P - shift
        return OracleResult(sorted([(simple, 1), (double, 2)]))

    if D > 0:
        m = 2.0 * math.sqrt(-P / 3.0)
        arg = 3.0 * Q / (P * m)  # = (3Q / 2P) sqrt(-3/P)
        angle = math.acos(max(-1.0, min(1.0, arg))) / 3.0
        ts = [m * math.cos(angle - 2.0 * math.pi * k / 3.0) for k in range(3)]
        return OracleResult(sorted((t - shift, 1) for t in ts))

    root = math.sqrt(Q * Q / 4.0 + P ** 3 / 27.0)
    big = -Q / 2.0 - math.copysign(root, Q)
    u = math.copysign(abs(big) ** (1.0 / 3.0), big)
    v = -P / (3.0 * u) if u != 0.0 else 0.0
    t = u + v
    pair = (-t / 2.0 - shift, math.sqrt(3.0) / 2.0 * abs(u - v))
    return OracleResult([(t - shift, 1)], pair)


@dataclass(frozen=True)
class CrossCheck:
    solver: List[float]
    oracle: List[float]
    cardano: List[float]
    max_discrepancy: float
    count_agrees: bool
    multiplicity_agrees: bool

    @property
    def agrees(self) -> bool:
        return self.count_agrees and self.multiplicity_agrees


def _discrepancy(xs: List[float], ys: List[float]) -> float:
    if len(xs) != len(ys):
        return math.inf
    return max((abs(x - y) for x, y in zip(xs, ys)), default=0.0)


def cross_check(p: MonicCubic, **solve_kwargs) -> CrossCheck:
    from .refiner import solve

    report = solve(p, **solve_kwargs)
    ora = oracle_roots(p)
    car = cardano_roots(p)
    solver = report.real_roots_expanded()
    lists = (solver, ora.expanded(), car.expanded())
    worst = max(_discrepancy(x, y) for i, x in enumerate(lists) for y in lists[i + 1:])

    def pattern(pairs):
        return sorted(m for _, m in pairs)

    solver_pattern = sorted(r.multiplicity for r in report.roots)
    return CrossCheck(
        solver=solver,
        oracle=lists[1],
        cardano=lists[2],
        max_discrepancy=worst,
        count_agrees=len(set(map(len, lists))) == 1,
        multiplicity_agrees=solver_pattern == pattern(ora.real_roots) == pattern(car.real_roots),
    )
