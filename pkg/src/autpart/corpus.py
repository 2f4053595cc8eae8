"""Graph corpora for experiments and tests.

``atlas_graphs`` needs networkx (a test/experiment extra); the random
generators only use the standard library.
"""
from __future__ import annotations

import random
from typing import Iterator, Optional

from .graph import Graph, in_class_h, is_connected


def atlas_graphs(max_n: int = 7, min_n: int = 1) -> Iterator[Graph]:
    """Every graph of the networkx atlas (all graphs up to 7 vertices, one per iso class)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n:
            yield Graph(n, [(u + 1, v + 1) for u, v in h.edges()])


def random_graph(rng: random.Random, n: int, p: Optional[float] = None) -> Graph:
    p = rng.random() if p is None else p
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph(n, edges)


def random_class_h(rng: random.Random, n: int, tries: int = 1000) -> Graph:
    """A random connected graph with at most half of the possible edges."""
    for _ in range(tries):
        g = random_graph(rng, n, rng.uniform(1.5 / n, 0.5))
        if in_class_h(g):
            return g
    raise RuntimeError(f"no connected sparse graph on {n} vertices after {tries} draws")


def random_regular(rng: random.Random, n: int, d: int, tries: int = 1000) -> Graph:
    """Connected d-regular graph by the pairing model with rejection."""
    if n * d % 2 or d >= n:
        raise ValueError("need n*d even and d < n")
    for _ in range(tries):
        points = [v for v in range(1, n + 1) for _ in range(d)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for a, b in zip(points[::2], points[1::2]):
            e = (min(a, b), max(a, b))
            if a == b or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            g = Graph(n, sorted(edges))
            if is_connected(g):
                return g
    raise RuntimeError(f"no simple connected {d}-regular graph on {n} vertices")


def relabel(g: Graph, image: list[int]) -> Graph:
    """Copy of ``g`` with vertex v renamed image[v-1]."""
    return Graph(g.n, [(image[u - 1], image[v - 1]) for u, v in g.edges()])


# -- Hughes plane of order 9 --------------------------------------------------
# GF(9) = GF(3)[i] with i^2 = -1; an element a+bi is the pair (a, b).

def _f9_add(u, v):
    return ((u[0] + v[0]) % 3, (u[1] + v[1]) % 3)


def _f9_mul(u, v):
    return ((u[0] * v[0] - u[1] * v[1]) % 3, (u[0] * v[1] + u[1] * v[0]) % 3)


_F9 = [(a, b) for a in range(3) for b in range(3)]
_ZERO = (0, 0)
_SQUARES = {_f9_mul(x, x) for x in _F9 if x != _ZERO}


def nearfield_mul(a, b):
    """Dickson nearfield of order 9: a*b if b is a square, else a^3 * b."""
    if a == _ZERO or b == _ZERO:
        return _ZERO
    return _f9_mul(a, b) if b in _SQUARES else _f9_mul(_f9_mul(_f9_mul(a, a), a), b)


def hughes_plane_points_lines():
    """Points and lines (as sets of point indices) of the Hughes plane of order 9.

    Points are nonzero triples over the nearfield up to right scalar
    multiplication. Lines are the images of {x + t*y + z = 0}, for t = 1 and
    t outside GF(3), under the 13 powers of a Singer matrix over GF(3).
    """
    from itertools import product

    nonzero = [x for x in _F9 if x != _ZERO]
    triples = [t for t in product(_F9, repeat=3) if t != (_ZERO,) * 3]
    canon = {t: min(tuple(nearfield_mul(x, k) for x in t) for k in nonzero) for t in triples}
    points = sorted(set(canon.values()))
    index = {p: i for i, p in enumerate(points)}
    # companion matrix of x^3 + 2x^2 + 1, irreducible over GF(3)
    A = [[0, 1, 0], [0, 0, 1], [2, 0, 1]]

    def image(p):
        return canon[tuple(
            _f9_add(_f9_add(_f9_mul((A[0][j], 0), p[0]), _f9_mul((A[1][j], 0), p[1])),
                    _f9_mul((A[2][j], 0), p[2]))
            for j in range(3))]

    lines = []
    seen = set()
    for t in [(1, 0)] + [x for x in _F9 if x[1] != 0]:
        line = frozenset(index[canon[p]] for p in triples
                         if _f9_add(_f9_add(p[0], nearfield_mul(t, p[1])), p[2]) == _ZERO)
        for _ in range(13):
            if line not in seen:
                seen.add(line)
                lines.append(line)
            line = frozenset(index[image(points[q])] for q in line)
    return points, lines


def hughes_plane_incidence() -> Graph:
    """Point-line incidence graph: points 1..91, lines 92..182."""
    points, lines = hughes_plane_points_lines()
    n = len(points)
    return Graph(n + len(lines), [(p + 1, n + 1 + j) for j, line in enumerate(lines)
                                  for p in sorted(line)])
