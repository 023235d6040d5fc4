"""Render the triangle construction for the three-real-root worked examples,
plus a rotation family at (a, b) = (3, 2).

    python scripts/render_figures.py --outdir figures
"""
import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Tuple

from smncubic import MonicCubic, envelope
from smncubic.render import render_svg


@dataclass
class FigureConfig:
    outdir: str = "figures"
    sweep: int = 9
    cubics: List[Tuple[str, float, float, float]] = field(
        default_factory=lambda: [
            ("lower_arc", 3.0, 2.0, -0.25),
            ("upper_arc", -4.0, 2.0, 3.0),
            ("balanced", 3.0, 2.0, 0.0),
        ]
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default=FigureConfig.outdir)
    parser.add_argument("--sweep", type=int, default=FigureConfig.sweep)
    cfg = FigureConfig(**vars(parser.parse_args()))

    out = Path(cfg.outdir)
    out.mkdir(parents=True, exist_ok=True)
    jobs = [(name, MonicCubic(a, b, c), 0) for name, a, b, c in cfg.cubics]
    env = envelope(3.0, 2.0)
    jobs.append(("upper_extreme", MonicCubic(3.0, 2.0, env.c1), 0))
    jobs.append(("rotation_family", MonicCubic(3.0, 2.0, env.c0), cfg.sweep))
    for name, p, sweep in jobs:
        path = out / f"{name}.svg"
        path.write_text(render_svg(p, sweep=sweep), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
