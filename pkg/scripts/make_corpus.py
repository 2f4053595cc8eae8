"""Write a benchmark corpus of DIMACS files for ``autpart bench``.

    python3 scripts/make_corpus.py corpus/ --random 40 --seed 1
    autpart bench corpus/ --jobs 4 --plot-data corpus_times.csv
"""
import argparse
import os
import random

import networkx as nx

from autpart.corpus import hughes_plane_incidence, random_class_h, random_regular
from autpart.graph import Graph, g8, petersen_graph, to_dimacs


def from_nx(h):
    idx = {v: i + 1 for i, v in enumerate(h.nodes())}
    return Graph(h.number_of_nodes(), [(idx[u], idx[v]) for u, v in h.edges()])


def named_graphs():
    yield "g8", g8()
    yield "petersen", petersen_graph()
    yield "q4", from_nx(nx.hypercube_graph(4))
    yield "heawood", from_nx(nx.heawood_graph())
    yield "desargues", from_nx(nx.desargues_graph())
    yield "dodecahedron", from_nx(nx.dodecahedral_graph())
    yield "tutte8cage", from_nx(nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5))
    yield "torus6x6", from_nx(nx.grid_2d_graph(6, 6, periodic=True))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out")
    ap.add_argument("--random", type=int, default=20, help="random graphs of each kind")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--hughes", action="store_true", help="include the n=182 Hughes plane")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    graphs = list(named_graphs())
    rng = random.Random(args.seed)
    for i in range(args.random):
        graphs.append((f"sparse{i:03d}", random_class_h(rng, rng.randint(7, 8))))
        n = rng.choice((12, 16, 20, 24))
        graphs.append((f"cubic{i:03d}", random_regular(rng, n, 3)))
    if args.hughes:
        graphs.append(("hughes9", hughes_plane_incidence()))
    for name, g in graphs:
        with open(os.path.join(args.out, name + ".dimacs"), "w", encoding="utf-8") as fh:
            fh.write(to_dimacs(g))
    print(f"wrote {len(graphs)} graphs to {args.out}")


if __name__ == "__main__":
    main()
