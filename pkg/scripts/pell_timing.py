"""Time the solvers over a range of t and report the largest fundamental units.

Compares the convergent scan against the bounded Nagell search for
x^2 - 4t y^2 = 5 wherever the Nagell bound stays below --nagell-cap.

    python scripts/pell_timing.py --to 500
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from k3hilb.pell import (
    fundamental_search_bound,
    is_square,
    minimal_solution_general,
    minimal_solution_p1,
    minimal_solution_pm1,
)


@dataclass
class Config:
    stop: int = 500
    top: int = 5
    nagell_cap: int = 10**5


def parse_args(argv=None) -> Config:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--to", dest="stop", type=int, default=Config.stop)
    p.add_argument("--top", type=int, default=Config.top)
    p.add_argument("--nagell-cap", type=int, default=Config.nagell_cap)
    return Config(**vars(p.parse_args(argv)))


def run(cfg: Config) -> None:
    ts = [t for t in range(2, cfg.stop + 1) if not is_square(t)]

    t0 = time.perf_counter()
    units = {t: minimal_solution_p1(t) for t in ts}
    for t in ts:
        minimal_solution_pm1(t)
    t1 = time.perf_counter()
    five = {t: minimal_solution_general(4 * t, 5) for t in ts}
    t2 = time.perf_counter()

    compared = 0
    for t in ts:
        if fundamental_search_bound(4 * t, 5) > cfg.nagell_cap:
            continue
        assert minimal_solution_general(4 * t, 5, method="nagell") == five[t], t
        compared += 1
    t3 = time.perf_counter()

    print(f"{len(ts)} non-square t up to {cfg.stop}")
    print(f"  P_t(+-1) by continued fractions   {t1 - t0:8.3f}s")
    print(f"  P_4t(5) by convergent scan         {t2 - t1:8.3f}s  ({sum(v is not None for v in five.values())} solvable)")
    print(f"  Nagell search agreed on {compared:>4} t     {t3 - t2:8.3f}s")
    print(f"\nlargest fundamental units (digits of y):")
    for t in sorted(ts, key=lambda t: units[t].y, reverse=True)[: cfg.top]:
        print(f"  t={t:<5} {len(str(units[t].y)):>3}  y={units[t].y}")


if __name__ == "__main__":
    run(parse_args())
