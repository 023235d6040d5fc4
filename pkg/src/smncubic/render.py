"""Hand-written SVG of the cubic, its triangle and incircle.

Output is a pure function of the inputs: fixed viewport, fixed number
formatting, no timestamps or ids derived from memory addresses.
"""
from __future__ import annotations

from typing import List, Sequence

from .classifier import DEFAULT_BOUNDARY_TOL
from .core import (
    DomainError,
    MonicCubic,
    SmnTriangle,
    balanced_roots,
    critical_points,
    envelope,
    evaluate,
    smn_triangle,
)
from .refiner import solve

WIDTH = 800
HEIGHT = 600
PADDING = 0.05
CURVE_SAMPLES = 400


def fmt_data(x: float) -> str:
    return "%.12g" % (x + 0.0)


class _Viewport:
    """World-to-pixel map with equal axis scaling and a flipped y axis."""

    def __init__(self, xmin, xmax, ymin, ymax):
        inner_w = WIDTH * (1 - 2 * PADDING)
        inner_h = HEIGHT * (1 - 2 * PADDING)
        self.scale = min(inner_w / (xmax - xmin), inner_h / (ymax - ymin))
        self.x0 = WIDTH / 2 - self.scale * (xmin + xmax) / 2
        self.y0 = HEIGHT / 2 + self.scale * (ymin + ymax) / 2

    def px(self, x: float) -> str:
        return "%.3f" % (self.x0 + self.scale * x + 0.0)

    def py(self, y: float) -> str:
        return "%.3f" % (self.y0 - self.scale * y + 0.0)

    def point(self, pt) -> str:
        return f"{self.px(pt[0])},{self.py(pt[1])}"


def triangle_of(p: MonicCubic, boundary_tol: float = DEFAULT_BOUNDARY_TOL) -> SmnTriangle:
    report = solve(p, boundary_tol=boundary_tol)
    if not report.classification.case.has_triangle:
        raise DomainError(
            f"no triangle for {p}: requires b < a^2/3 and c2 <= c <= c1 "
            f"(case {report.classification.case.value})"
        )
    return smn_triangle(*report.real_roots_expanded())


def _triangle_element(vp: _Viewport, tri: SmnTriangle, ident: str, style: str, c: float) -> str:
    pts = " ".join(vp.point(v) for v in tri.vertices)
    data = " ".join(
        f'data-{name}="{fmt_data(v[0])},{fmt_data(v[1])}"'
        for name, v in zip("PQR", tri.vertices)
    )
    return (
        f'<polygon id="{ident}" points="{pts}" {style} data-c="{fmt_data(c)}" '
        f'data-theta="{fmt_data(tri.theta)}" {data}/>'
    )


def render_svg(
    p: MonicCubic, sweep: int = 0, boundary_tol: float = DEFAULT_BOUNDARY_TOL
) -> str:
    tri = triangle_of(p, boundary_tol)
    crit = critical_points(p)
    nu1, _, nu3 = balanced_roots(p.a, p.b)
    r, phi = crit.r, crit.phi

    xmin, xmax = nu3 - r, nu1 + r
    vp = _Viewport(xmin, xmax, -2.5 * r, 2.5 * r)
    top, bottom = vp.py(2.5 * r), vp.py(-2.5 * r)

    out: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>x^3 + ({fmt_data(p.a)}) x^2 + ({fmt_data(p.b)}) x + ({fmt_data(p.c)})</title>",
        '<defs><clipPath id="plot"><rect x="%.3f" y="%.3f" width="%.3f" height="%.3f"/></clipPath></defs>'
        % (WIDTH * PADDING, HEIGHT * PADDING, WIDTH * (1 - 2 * PADDING), HEIGHT * (1 - 2 * PADDING)),
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line id="abscissa" x1="{vp.px(xmin)}" y1="{vp.py(0)}" x2="{vp.px(xmax)}" '
        f'y2="{vp.py(0)}" stroke="black" stroke-width="1"/>',
    ]

    for name, x in (("mu2", crit.mu2), ("phi", phi), ("mu1", crit.mu1)):
        out.append(
            f'<line id="{name}" x1="{vp.px(x)}" y1="{top}" x2="{vp.px(x)}" y2="{bottom}" '
            f'stroke="gray" stroke-dasharray="6,4" data-x="{fmt_data(x)}"/>'
        )

    xs = [xmin + (xmax - xmin) * i / (CURVE_SAMPLES - 1) for i in range(CURVE_SAMPLES)]
    curve = " ".join(f"{vp.px(x)},{vp.py(evaluate(p, x))}" for x in xs)
    out.append(
        f'<polyline id="curve" points="{curve}" fill="none" stroke="steelblue" '
        f'stroke-width="2" clip-path="url(#plot)"/>'
    )

    if sweep > 0:
        env = envelope(p.a, p.b)
        out.append('<g id="sweep">')
        for k in range(sweep):
            t = k / (sweep - 1) if sweep > 1 else 0.5
            c = env.c2 + (env.c1 - env.c2) * t
            member = triangle_of(MonicCubic(p.a, p.b, c), boundary_tol)
            out.append(
                _triangle_element(
                    vp, member, f"sweep-{k}", 'fill="none" stroke="silver" stroke-width="1"', c
                )
            )
        out.append("</g>")

    out.append(
        f'<circle id="incircle" cx="{vp.px(phi)}" cy="{vp.py(0)}" r="{"%.3f" % (vp.scale * r)}" '
        f'fill="none" stroke="darkgreen" stroke-width="1.5"/>'
    )
    out.append(
        _triangle_element(
            vp, tri, "triangle", 'fill="none" stroke="firebrick" stroke-width="2"', p.c
        )
    )

    for name, v in zip("PQR", tri.vertices):
        out.append(
            f'<line x1="{vp.px(v[0])}" y1="{vp.py(v[1])}" x2="{vp.px(v[0])}" y2="{vp.py(0)}" '
            f'stroke="firebrick" stroke-dasharray="2,3"/>'
        )
        out.append(
            f'<circle class="root" cx="{vp.px(v[0])}" cy="{vp.py(0)}" r="4" fill="black" '
            f'data-x="{fmt_data(v[0])}"/>'
        )
        out.append(
            f'<text x="{vp.px(v[0])}" y="{vp.py(v[1])}" dx="6" dy="-6" '
            f'font-family="sans-serif" font-size="14">{name}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def triangle_family(p: MonicCubic, count: int) -> Sequence[SmnTriangle]:
    """Triangles for c evenly spaced over [c2, c1] at fixed (a, b)."""
    env = envelope(p.a, p.b)
    cs = [env.c2 + (env.c1 - env.c2) * k / max(1, count - 1) for k in range(count)]
    return [triangle_of(MonicCubic(p.a, p.b, c)) for c in cs]
