#!/usr/bin/env python3
"""Hill-climb quality sweep over random family-free starting graphs.

For each (n, seed) cell: sample a free graph, climb, and record whether
the run reached the quarter-square target floor((n-2)^2/4).  Prints a
per-n summary plus the overall hit rate.
"""

import argparse
import random
import time
from dataclasses import dataclass

from booklab.graphs import count_cliques
from booklab.patterns import parse_family
from booklab.search import random_free_graph, symmetrize


@dataclass
class Config:
    n_min: int = 10
    n_max: int = 16
    seeds: int = 30
    r: int = 4
    family: str = "B(4,1),H1,K(5)"


def run(cfg: Config) -> float:
    fam = parse_family(cfg.family)
    t0 = time.perf_counter()
    total = hits = 0
    for n in range(cfg.n_min, cfg.n_max + 1):
        target = (n - 2) ** 2 // 4
        reached = 0
        moves = []
        for seed in range(cfg.seeds):
            g = random_free_graph(n, fam, random.Random(n * 10007 + seed))
            rep = symmetrize(g, cfg.r, fam, seed=seed)
            assert rep.maximum >= count_cliques(g, cfg.r)
            reached += rep.maximum >= target
            moves.append(len(rep.history) - 1)
        total += cfg.seeds
        hits += reached
        print(
            f"n={n:3d} target={target:4d} reached {reached:3d}/{cfg.seeds}"
            f"  moves avg {sum(moves) / len(moves):.1f} max {max(moves)}"
        )
    rate = hits / total
    print(f"overall: {hits}/{total} = {rate:.1%} in {time.perf_counter() - t0:.1f}s")
    return rate


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--seeds", type=int, default=Config.seeds)
    ap.add_argument("--r", type=int, default=Config.r)
    ap.add_argument("--family", default=Config.family)
    a = ap.parse_args()
    run(Config(n_min=a.n_min, n_max=a.n_max, seeds=a.seeds, r=a.r, family=a.family))
