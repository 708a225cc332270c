"""Solve time against f_n over repeated barycentric subdivision of the Hopf fixture.

    python scripts/scaling.py --levels 2 --repeats 3

Prints one row per level and the exponent of a log-log fit through the
measured solve times.
"""

import argparse
import math
from dataclasses import dataclass

from simphopf import HopfOptions, compute_hopf
from simphopf.fixtures import barycentric_subdivision, hopf_fixture


@dataclass
class ScalingConfig:
    levels: int = 2
    repeats: int = 3
    pivoting: str = "markowitz"


def run(cfg: ScalingConfig):
    c, lab = hopf_fixture()
    rows = []
    for level in range(cfg.levels + 1):
        if level:
            c, lab = barycentric_subdivision(c, lab)
        results = [compute_hopf(c, lab, HopfOptions(pivoting=cfg.pivoting)) for _ in range(cfg.repeats)]
        best = min(results, key=lambda r: r.stats["solve_time"])
        rows.append((level, c.f_vector, best.hopf, best.stats["solve_time"], best.stats["fill"]))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--levels", type=int, default=ScalingConfig.levels)
    ap.add_argument("--repeats", type=int, default=ScalingConfig.repeats)
    ap.add_argument("--pivoting", choices=("markowitz", "natural"), default=ScalingConfig.pivoting)
    cfg = ScalingConfig(**vars(ap.parse_args()))

    rows = run(cfg)
    print(f"{'level':>5} {'f_vector':>28} {'H':>3} {'solve_s':>9} {'fill':>9}")
    for level, fv, h, t, fill in rows:
        print(f"{level:>5} {str(fv):>28} {h:>3} {t:>9.4f} {fill:>9}")
    if len(rows) > 1:
        xs = [math.log(r[1][2]) for r in rows]
        ys = [math.log(max(r[3], 1e-9)) for r in rows]
        mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
        slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
        print(f"fitted exponent of f_2: {slope:.2f} (cubic bound: 3)")


if __name__ == "__main__":
    main()
