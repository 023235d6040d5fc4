"""Reproducible cubic populations and the solver-vs-oracle check run over them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List

import numpy as np

from .classifier import DEFAULT_BOUNDARY_TOL, classify
from .core import MonicCubic, envelope
from .oracle import oracle_roots
from .refiner import solve

ROOT_AGREEMENT = 1e-8
CONTAINMENT_SLACK = 1e-9


def random_cubics(n: int, seed: int = 0, low: float = -10.0, high: float = 10.0) -> List[MonicCubic]:
    rng = np.random.default_rng(seed)
    return [MonicCubic(*row) for row in rng.uniform(low, high, size=(n, 3))]


def boundary_cubics(n: int, seed: int = 1) -> List[MonicCubic]:
    """Cubics sitting on c0, c1, c2 or on b = a^2/3 (half of those triple)."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(n):
        a = rng.uniform(-10.0, 10.0)
        kind = k % 4
        if kind < 3:
            b = a * a / 3.0 - rng.uniform(0.01, 10.0)
            env = envelope(a, b)
            c = (env.c0, env.c1, env.c2)[kind]
        else:
            b = a * a / 3.0
            c = a ** 3 / 27.0 if (k // 4) % 2 == 0 else rng.uniform(-10.0, 10.0)
        out.append(MonicCubic(a, b, c))
    return out


def three_real_cubics(n: int, seed: int = 2) -> List[MonicCubic]:
    """Uniform (a, b, c) in [-10, 10]^3 rejected until c lies strictly inside [c2, c1]."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        a, b, c = rng.uniform(-10.0, 10.0, size=3)
        if b >= a * a / 3.0:
            continue
        env = envelope(a, b)
        if env.c2 < c < env.c1:
            out.append(MonicCubic(a, b, c))
    return out


@dataclass
class AgreementTally:
    checked: int = 0
    count_mismatches: List[MonicCubic] = field(default_factory=list)
    root_mismatches: List[MonicCubic] = field(default_factory=list)
    containment_failures: List[MonicCubic] = field(default_factory=list)
    worst_root_gap: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.count_mismatches or self.root_mismatches or self.containment_failures)

    def summary(self) -> str:
        return (
            f"{self.checked} cubics: {len(self.count_mismatches)} count mismatches, "
            f"{len(self.root_mismatches)} root mismatches (worst gap {self.worst_root_gap:.2e}), "
            f"{len(self.containment_failures)} containment failures"
        )


def check_against_oracle(
    cubics: Iterable[MonicCubic], boundary_tol: float = DEFAULT_BOUNDARY_TOL
) -> AgreementTally:
    tally = AgreementTally()
    for p in cubics:
        tally.checked += 1
        cls = classify(p, boundary_tol)
        report = solve(p, boundary_tol=boundary_tol)
        truth = oracle_roots(p)

        if cls.case.real_root_count != truth.real_count:
            tally.count_mismatches.append(p)
            continue

        mine, theirs = report.real_roots_expanded(), truth.expanded()
        gaps = [abs(x - y) / max(1.0, abs(y)) for x, y in zip(mine, theirs)]
        worst = max(gaps)
        tally.worst_root_gap = max(tally.worst_root_gap, worst)
        if worst >= ROOT_AGREEMENT:
            tally.root_mismatches.append(p)

        for interval in report.isolation:
            inside = sum(
                m
                for x, m in truth.real_roots
                if interval.lo - CONTAINMENT_SLACK * max(1.0, abs(x))
                <= x
                <= interval.hi + CONTAINMENT_SLACK * max(1.0, abs(x))
            )
            if inside != interval.multiplicity:
                tally.containment_failures.append(p)
                break
    return tally
