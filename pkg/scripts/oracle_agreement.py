"""Solver vs. independent oracle on random and constructed boundary cubics.

    python scripts/oracle_agreement.py --random 100000 --boundary 1000 --out results/agreement.json
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from smncubic.suite import boundary_cubics, check_against_oracle, random_cubics


@dataclass
class AgreementConfig:
    random: int = 100_000
    boundary: int = 1_000
    seed: int = 0
    boundary_tol: float = 1e-12
    out: str = ""


def parse_config() -> AgreementConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(AgreementConfig):
        parser.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default)
    return AgreementConfig(**vars(parser.parse_args()))


def run(cfg: AgreementConfig) -> dict:
    result = {"config": asdict(cfg)}
    for name, cubics in (
        ("random", random_cubics(cfg.random, seed=cfg.seed)),
        ("boundary", boundary_cubics(cfg.boundary, seed=cfg.seed + 1)),
    ):
        start = time.perf_counter()
        tally = check_against_oracle(cubics, cfg.boundary_tol)
        elapsed = time.perf_counter() - start
        print(f"{name:8s} {tally.summary()}  [{elapsed:.1f} s]")
        result[name] = {
            "checked": tally.checked,
            "count_mismatches": len(tally.count_mismatches),
            "root_mismatches": len(tally.root_mismatches),
            "containment_failures": len(tally.containment_failures),
            "worst_root_gap": tally.worst_root_gap,
            "seconds": elapsed,
            "failures": [
                [p.a, p.b, p.c]
                for p in tally.count_mismatches + tally.root_mismatches + tally.containment_failures
            ][:20],
        }
    return result


if __name__ == "__main__":
    cfg = parse_config()
    result = run(cfg)
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(json.dumps(result, indent=2) + "\n")
