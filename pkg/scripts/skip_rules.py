"""Compare the two skip rules of the exact search against brute force.

"stabilizer" skips a vertex only through generators that fix the current
prefix; "group" skips through orbits of the whole running group. The script
counts wrong orders and reports search effort for each rule.

    python3 scripts/skip_rules.py --max-n 7 --random 500 --hughes
"""
import argparse
import random
from collections import Counter

from autpart.corpus import atlas_graphs, hughes_plane_incidence, random_graph
from autpart.oracle import brute_force
from autpart.search import SearchConfig, vseparn


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7, help="atlas graphs up to this size")
    ap.add_argument("--random", type=int, default=300, help="extra random graphs, n = 7..8")
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--hughes", action="store_true",
                    help="also run the n=182 Hughes plane (known order 67392)")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    corpus = list(atlas_graphs(args.max_n))
    corpus += [random_graph(rng, rng.randint(7, 8)) for _ in range(args.random)]
    truth = [brute_force(g).order for g in corpus]
    if args.hughes:
        corpus.append(hughes_plane_incidence())
        truth.append(67392)
    print(f"{len(corpus)} graphs")
    print(f"{'rule':<12}{'wrong':>7}{'leaves':>10}{'compares':>10}{'max LK':>8}  cases")
    for rule in ("stabilizer", "group"):
        cfg = SearchConfig(skip_rule=rule)
        wrong = leaves = comps = lk = 0
        cases = Counter()
        for g, order in zip(corpus, truth):
            res = vseparn(g, cfg=cfg, gate=False)
            wrong += res.order != order
            leaves += res.metrics.leaves
            comps += res.metrics.comparisons
            lk = max(lk, res.metrics.max_lk)
            cases.update(res.metrics.cases)
        print(f"{rule:<12}{wrong:>7}{leaves:>10}{comps:>10}{lk:>8}  "
              + " ".join(f"CS{k}={cases.get(k, 0)}" for k in (1, 2, 3, 4)))


if __name__ == "__main__":
    main()
