#!/usr/bin/env python3
"""Rank growth of banded commutation matrices.

Sweeps every pattern of a given bandwidth over GF(p) (or a single
user-supplied pattern) and tabulates how the form rank grows with the
truncation size.  Patterns whose rank keeps climbing are the candidates
for genuinely infinite-dimensional systems; the flag printed here is the
same heuristic the `spinlab grow` command reports.
"""

import argparse
import itertools
from dataclasses import dataclass

from spinlab import structure_report, toeplitz_matrix


@dataclass
class SweepConfig:
    p: int = 2
    bandwidth: int = 3
    n_max: int = 12
    pattern: tuple[int, ...] | None = None  # overrides the sweep


def run_pattern(cfg: SweepConfig, pattern: tuple[int, ...]) -> None:
    mat = toeplitz_matrix(cfg.p, pattern, cfg.n_max)
    report = structure_report(mat)
    flag = "growing" if report.infinite_rank_conjectured else "stalled"
    ranks = " ".join(f"{r:>2}" for r in report.prefix_ranks)
    print(f"pattern {' '.join(map(str, pattern)):<12} ranks {ranks}  [{flag}]")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-p", type=int, default=2, help="prime modulus")
    parser.add_argument("--bandwidth", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument(
        "--pattern", type=int, nargs="+", default=None,
        help="single pattern to examine instead of sweeping",
    )
    args = parser.parse_args()
    cfg = SweepConfig(
        p=args.p,
        bandwidth=args.bandwidth,
        n_max=args.n_max,
        pattern=tuple(args.pattern) if args.pattern else None,
    )
    if cfg.pattern is not None:
        run_pattern(cfg, cfg.pattern)
        return
    print(f"# all bandwidth-{cfg.bandwidth} patterns over GF({cfg.p}), "
          f"prefixes up to n = {cfg.n_max}")
    for pattern in itertools.product(range(cfg.p), repeat=cfg.bandwidth):
        if not any(pattern):
            continue
        run_pattern(cfg, pattern)


if __name__ == "__main__":
    main()
