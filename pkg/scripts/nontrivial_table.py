"""Tabulate every t in a range carrying a non-natural involution.

    python scripts/nontrivial_table.py --to 1000
    python scripts/nontrivial_table.py --to 300 --trivial-reasons
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from k3hilb.ample_cone import compute_cone, cone_inequality
from k3hilb.classifier import AutTag, classify


@dataclass
class Config:
    start: int = 2
    stop: int = 500
    trivial_reasons: bool = False


def parse_args(argv=None) -> Config:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--from", dest="start", type=int, default=Config.start)
    p.add_argument("--to", dest="stop", type=int, default=Config.stop)
    p.add_argument("--trivial-reasons", action="store_true", help="also count why the rest are trivial")
    return Config(**vars(p.parse_args(argv)))


def _kind(reason: str) -> str:
    # reasons embed t, so bucket them by which condition failed
    if "square" in reason:
        return "t is a perfect square"
    if "=5" in reason:
        return "x^2-4t y^2=5 solvable"
    return "x^2-t y^2=-1 unsolvable"


def run(cfg: Config) -> None:
    reasons = Counter()
    print(f"{'t':>5}  {'D':<28}  {'P_t(-1) minimal':<30}  cone")
    for t in range(cfg.start, cfg.stop + 1):
        r = classify(t)
        if r.tag is not AutTag.NON_NATURAL_INVOLUTION:
            reasons[_kind(r.reason) if r.reason else r.tag.value] += 1
            continue
        D = f"{r.D.x}h-{r.D.y}delta"
        pm1 = f"({r.pell_m1.x},{r.pell_m1.y})"
        print(f"{t:>5}  {D:<28}  {pm1:<30}  {cone_inequality(compute_cone(t)[0])}")
    total = cfg.stop - cfg.start + 1
    print(f"\n{total - sum(reasons.values())} of {total} values of t are non-trivial")
    if cfg.trivial_reasons:
        for reason, n in reasons.most_common():
            print(f"  {n:>5}  {reason}")


if __name__ == "__main__":
    run(parse_args())
