"""Exact-match rate and cost of the heuristic over a grid of (k1, nm2).

    python3 scripts/heuristic_sweep.py --graphs 300
"""
import argparse
import random
import time

from autpart.corpus import random_class_h, random_regular
from autpart.heuristic import HeurConfig, heuraut
from autpart.search import vseparn


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=200)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--k1", type=float, nargs="+", default=[0.1, 0.35, 0.7, 1.0])
    ap.add_argument("--nm2", type=int, nargs="+", default=[1, 2, 5])
    args = ap.parse_args()
    rng = random.Random(args.seed)
    corpus = []
    for i in range(args.graphs):
        if i % 2:
            corpus.append(random_class_h(rng, rng.randint(7, 12)))
        else:
            corpus.append(random_regular(rng, rng.choice((10, 12, 14, 16, 18)), 3))
    exact = [vseparn(g).order for g in corpus]
    print(f"{'k1':>5}{'nm2':>5}{'match':>9}{'refinements':>13}{'seconds':>9}")
    for k1 in args.k1:
        for nm2 in args.nm2:
            cfg = HeurConfig(k1=k1, nm2=nm2)
            hits = refs = 0
            t0 = time.perf_counter()
            for g, order in zip(corpus, exact):
                res = heuraut(g, cfg=cfg)
                assert order % res.order == 0
                hits += res.order == order
                refs += res.metrics.refinements
            dt = time.perf_counter() - t0
            print(f"{k1:>5}{nm2:>5}{hits / len(corpus):>9.1%}{refs:>13}{dt:>9.2f}")


if __name__ == "__main__":
    main()
