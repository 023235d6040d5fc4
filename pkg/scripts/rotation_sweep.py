"""Rotation angle of the root triangle as the free term sweeps [c2, c1].

Compares the angle recovered from refined roots with the closed form
sin(3 theta) = (c - c0) / (c1 - c0) and writes a CSV of the sweep.

    python scripts/rotation_sweep.py --a 3 --b 2 --steps 101 --out results/rotation.csv
"""
import argparse
import csv
import math
import sys
from dataclasses import dataclass, fields

import numpy as np

from smncubic import MonicCubic, envelope, rotation_angle, smn_triangle, solve


@dataclass
class SweepConfig:
    a: float = 3.0
    b: float = 2.0
    steps: int = 101
    out: str = ""


def parse_config() -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        parser.add_argument(f"--{f.name}", type=type(f.default), default=f.default)
    return SweepConfig(**vars(parser.parse_args()))


def sweep(cfg: SweepConfig):
    env = envelope(cfg.a, cfg.b)
    rows = []
    for c in np.linspace(env.c2, env.c1, cfg.steps):
        p = MonicCubic(cfg.a, cfg.b, float(c))
        theta = rotation_angle(p)
        s = (p.c - env.c0) / (env.c1 - env.c0)
        closed = math.asin(max(-1.0, min(1.0, s))) / 3.0
        x1, x2, x3 = solve(p).real_roots_expanded()
        tri = smn_triangle(x1, x2, x3)
        rows.append(dict(c=p.c, theta=theta, closed_form=closed, x1=x1, x2=x2, x3=x3,
                         px=tri.P[0], py=tri.P[1]))
    return env, rows


def main():
    cfg = parse_config()
    env, rows = sweep(cfg)
    thetas = [r["theta"] for r in rows]
    gap = max(abs(r["theta"] - r["closed_form"]) for r in rows)
    print(f"c2={env.c2:.6f} c0={env.c0:.6f} c1={env.c1:.6f}")
    print(f"theta from {thetas[0]:.9f} to {thetas[-1]:.9f} (pi/6 = {math.pi / 6:.9f})")
    print(f"strictly increasing: {all(t1 > t0 for t0, t1 in zip(thetas, thetas[1:]))}")
    print(f"max |theta - closed form| = {gap:.2e}")
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)
    if cfg.out:
        fh.close()


if __name__ == "__main__":
    main()
