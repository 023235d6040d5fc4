"""Coefficient and geometry types for the monic cubic x^3 + a x^2 + b x + c.

Everything here is a closed-form function of (a, b, c): discriminants, the
envelope of free terms (c0, c1, c2), stationary/balanced/extreme roots and the
equilateral triangle whose vertices project onto the three real roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

SQRT3 = math.sqrt(3.0)

# Radicand a^2 - 3b below -RADICAND_BAND * max(1, a^2) is a domain error;
# anything between that and zero is clamped to zero.
RADICAND_BAND = 1e-14

Point = Tuple[float, float]


class DomainError(ValueError):
    """Raised when a quantity is requested outside the region where it exists."""


class DegenerateTriangleError(ValueError):
    """Raised for three equal roots, which project from no triangle."""


@dataclass(frozen=True)
class MonicCubic:
    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"coefficient {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.a), abs(self.b), abs(self.c))

    def derivative(self, x: float) -> float:
        return (3.0 * x + 2.0 * self.a) * x + self.b

    def reflected(self) -> "MonicCubic":
        """The monic cubic whose roots are the negatives of this one's."""
        return MonicCubic(-self.a, self.b, -self.c)


@dataclass(frozen=True)
class DiscriminantInfo:
    delta3: float
    delta2: float
    q: float


@dataclass(frozen=True)
class Envelope:
    c0: float
    c1: float
    c2: float


@dataclass(frozen=True)
class CriticalData:
    mu1: float
    mu2: float
    phi: float
    r: float


@dataclass(frozen=True)
class SmnTriangle:
    P: Point
    Q: Point
    R: Point
    centroid: Point
    r: float
    alpha: float
    theta: float

    @property
    def vertices(self) -> Tuple[Point, Point, Point]:
        return (self.P, self.Q, self.R)

    def side_lengths(self) -> Tuple[float, float, float]:
        return (
            math.dist(self.P, self.Q),
            math.dist(self.Q, self.R),
            math.dist(self.R, self.P),
        )

    @property
    def incircle_projection(self) -> Tuple[float, float]:
        x = self.centroid[0]
        return (x - self.r, x + self.r)


def evaluate(p: MonicCubic, x: float) -> float:
    return ((x + p.a) * x + p.b) * x + p.c


def cbrt(u: float) -> float:
    """Real cube root; negative arguments go through -cbrt(-u)."""
    if u < 0.0:
        return -((-u) ** (1.0 / 3.0))
    return u ** (1.0 / 3.0)


def discriminant(p: MonicCubic) -> DiscriminantInfo:
    a, b, c = p.a, p.b, p.c
    delta3 = -27.0 * c * c + (18.0 * a * b - 4.0 * a ** 3) * c + a * a * b * b - 4.0 * b ** 3
    q = a * a - 3.0 * b
    return DiscriminantInfo(delta3=delta3, delta2=16.0 * q ** 3, q=q)


def sqrt_q(a: float, b: float) -> Optional[float]:
    """sqrt(a^2 - 3b), or None when the radicand is negative beyond the clamp band."""
    q = a * a - 3.0 * b
    if q < 0.0:
        if q < -RADICAND_BAND * max(1.0, a * a):
            return None
        return 0.0
    return math.sqrt(q)


def _require_sqrt_q(a: float, b: float) -> float:
    s = sqrt_q(a, b)
    if s is None:
        raise DomainError(f"b = {b!r} exceeds a^2/3 = {a * a / 3.0!r}; no stationary points")
    return s


def critical_points(p: MonicCubic) -> Optional[CriticalData]:
    s = sqrt_q(p.a, p.b)
    if s is None:
        return None
    phi = -p.a / 3.0
    r = s / 3.0
    return CriticalData(mu1=phi + r, mu2=phi - r, phi=phi, r=r)


def envelope(a: float, b: float) -> Envelope:
    s = _require_sqrt_q(a, b)
    c0 = -2.0 * a ** 3 / 27.0 + a * b / 3.0
    half_width = 2.0 / 27.0 * s ** 3
    return Envelope(c0=c0, c1=c0 + half_width, c2=c0 - half_width)


def balanced_roots(a: float, b: float) -> Tuple[float, float, float]:
    """Roots (nu1, nu2, nu3) of the balanced cubic, the one with c = c0."""
    s = _require_sqrt_q(a, b)
    phi = -a / 3.0
    half = s / SQRT3
    return (phi + half, phi, phi - half)


def extreme_roots(a: float, b: float) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    """((mu1, xi1), (mu2, xi2)): double and simple roots of the c = c1 and c = c2 cubics."""
    s = _require_sqrt_q(a, b)
    phi = -a / 3.0
    r = s / 3.0
    return ((phi + r, phi - 2.0 * r), (phi - r, phi + 2.0 * r))


def triangle_side(a: float, b: float) -> float:
    return math.sqrt(12.0) / 3.0 * _require_sqrt_q(a, b)


def smn_triangle(x1: float, x2: float, x3: float) -> SmnTriangle:
    """Equilateral triangle projecting onto the roots x3 <= x2 <= x1.

    ``theta`` is the counterclockwise rotation about the centroid away from the
    balanced position (side PR horizontal).  Vertex P sits at polar angle
    theta + pi/6 on the circumcircle.
    """
    if not (x3 <= x2 <= x1):
        raise ValueError(f"roots must satisfy x3 <= x2 <= x1, got {(x1, x2, x3)!r}")
    if x1 == x3:
        raise DegenerateTriangleError("all three roots are equal; the triangle is undefined")
    P = (x1, (x2 - x3) / SQRT3)
    Q = (x2, (x3 - x1) / SQRT3)
    R = (x3, (x1 - x2) / SQRT3)
    phi = (x1 + x2 + x3) / 3.0
    circumradius = math.hypot(P[0] - phi, P[1])
    return SmnTriangle(
        P=P,
        Q=Q,
        R=R,
        centroid=(phi, 0.0),
        r=circumradius / 2.0,
        alpha=SQRT3 * circumradius,
        theta=_rotation_from_roots(x1, x2, x3, phi),
    )


def _rotation_from_roots(x1: float, x2: float, x3: float, phi: float) -> float:
    # x_k - phi = 2r cos(theta + pi/6 - 2 pi k / 3) for k = 0, 1, 2, so
    # sum_k (x_k - phi) exp(-i (pi/6 - 2 pi k / 3)) = 3r exp(i theta).
    re = im = 0.0
    for k, x in enumerate((x1, x2, x3)):
        offset = math.pi / 6.0 - 2.0 * math.pi * k / 3.0
        re += (x - phi) * math.cos(offset)
        im -= (x - phi) * math.sin(offset)
    return math.atan2(im, re)


def rotation_angle(p: MonicCubic, tol: Optional[float] = None) -> float:
    """Rotation of the triangle built from the refined roots of ``p``.

    Ranges over [-pi/6, pi/6] as c sweeps [c2, c1]; zero for the balanced cubic.
    """
    from .classifier import DEFAULT_BOUNDARY_TOL, Case
    from .refiner import solve

    report = solve(p, boundary_tol=DEFAULT_BOUNDARY_TOL if tol is None else tol)
    if report.classification.case not in (Case.THREE_REAL_LOWER_ARC, Case.THREE_REAL_UPPER_ARC):
        raise DomainError(
            f"no triangle for {p}: requires b < a^2/3 and c2 <= c <= c1 "
            f"(case {report.classification.case.value})"
        )
    return smn_triangle(*report.real_roots_expanded()).theta
