"""Simple undirected graphs on vertices 1..n.

Adjacency is kept in the static two-array layout (``offsets`` + flattened
``neighbors``); every public function speaks 1-based vertex labels.
"""
from __future__ import annotations

import os
from collections import deque
from typing import Iterable, Iterator

MAX_N_DEFAULT = 20000


class GraphError(ValueError):
    """Malformed graph input."""


def max_supported_n() -> int:
    return int(os.environ.get("AUTPART_MAX_N", MAX_N_DEFAULT))


class Graph:
    """Immutable simple graph with sorted neighbor lists.

    ``offsets[v-1]:offsets[v]`` indexes the neighbors of vertex ``v`` inside
    ``neighbors``.
    """

    __slots__ = ("n", "k", "offsets", "neighbors", "_adj", "_adjset")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        cap = max_supported_n()
        if n > cap:
            raise GraphError(f"n={n} exceeds the supported maximum {cap} (AUTPART_MAX_N)")
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        k = 0
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u},{v}) has a vertex outside 1..{n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({min(u, v)},{max(u, v)})")
            adj[u].add(v)
            adj[v].add(u)
            k += 1
        self.n = n
        self.k = k
        self._adj: list[tuple[int, ...]] = [tuple(sorted(s)) for s in adj]
        self._adjset: list[frozenset[int]] = [frozenset(s) for s in adj]
        offsets = [0]
        flat: list[int] = []
        for v in range(1, n + 1):
            flat.extend(self._adj[v])
            offsets.append(len(flat))
        self.offsets = tuple(offsets)
        self.neighbors = tuple(flat)

    def adj(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(1, self.n + 1):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, k={self.k})"


def parse_graph(text: str, format: str = "dimacs-edge") -> Graph:
    if format in ("dimacs-edge", "dimacs"):
        return _parse_dimacs(text)
    if format in ("adjacency-list", "adj"):
        return _parse_adjacency(text)
    raise GraphError(f"unknown graph format {format!r}")


def read_graph(path: str, format: str = "dimacs-edge") -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), format)


def _parse_dimacs(text: str) -> Graph:
    n = None
    declared_k = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphError(f"line {lineno}: expected 'p edge <n> <k>'")
            if n is not None:
                raise GraphError(f"line {lineno}: second problem line")
            n, declared_k = _ints(parts[2:], lineno)
        elif parts[0] == "e":
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _ints(parts[1:], lineno)
            edges.append((u, v))
        else:
            raise GraphError(f"line {lineno}: unrecognised line {line!r}")
    if n is None:
        raise GraphError("missing 'p edge <n> <k>' header")
    g = Graph(n, edges)
    if declared_k != g.k:
        raise GraphError(f"header declares {declared_k} edges, found {g.k}")
    return g


def _parse_adjacency(text: str) -> Graph:
    rows: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise GraphError(f"line {lineno}: expected '<v>: <neighbors>'")
        (v,) = _ints([head], lineno)
        if v in rows:
            raise GraphError(f"line {lineno}: vertex {v} listed twice")
        rows[v] = _ints(tail.split(), lineno)
    n = max(rows, default=0)
    for v in range(1, n + 1):
        rows.setdefault(v, [])
    seen: set[tuple[int, int]] = set()
    edges = []
    for v, nbrs in rows.items():
        if v < 1:
            raise GraphError(f"vertex {v} outside 1..n")
        for w in nbrs:
            if w == v:
                raise GraphError(f"loop at vertex {v}")
            if not 1 <= w <= n:
                raise GraphError(f"vertex {w} (neighbor of {v}) outside 1..{n}")
            if w not in rows or v not in rows[w]:
                raise GraphError(f"asymmetric adjacency: {w} in Adj({v}) but not vice versa")
            e = (min(v, w), max(v, w))
            if v < w:
                if e in seen:
                    raise GraphError(f"duplicate edge {e}")
                seen.add(e)
                edges.append(e)
        if len(set(nbrs)) != len(nbrs):
            raise GraphError(f"duplicate neighbor in the list of vertex {v}")
    return Graph(n, edges)


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer token in {tokens!r}") from None


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.k}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_adjacency(g: Graph) -> str:
    return "".join(f"{v}: {' '.join(map(str, g.adj(v)))}".rstrip() + "\n" for v in g.vertices())


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u in range(1, g.n + 1) for v in range(u + 1, g.n + 1)
             if not g.has_edge(u, v)]
    return Graph(g.n, edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by minimum vertex."""
    seen = [False] * (g.n + 1)
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def in_class_h(g: Graph) -> bool:
    # k <= n(n-1)/4, kept in integers
    return is_connected(g) and 4 * g.k <= g.n * (g.n - 1)


def is_complete(g: Graph) -> bool:
    return 2 * g.k == g.n * (g.n - 1)


def is_empty(g: Graph) -> bool:
    return g.k == 0


def is_automorphism(g: Graph, p) -> bool:
    """Check that ``p`` maps every edge onto an edge.

    ``p`` is anything indexable as ``p(v)``; a bijection mapping edges to
    edges on a finite graph also maps non-edges to non-edges.
    """
    if len(p) != g.n:
        return False
    for u in g.vertices():
        pu = p(u)
        if g.degree(pu) != g.degree(u):
            return False
        nbrs = g._adjset[pu]
        for w in g.adj(u):
            if p(w) not in nbrs:
                return False
    return True


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# The 8-vertex cubic graph used for the partition-coding example.
G8_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 6),
            (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]


def g8() -> Graph:
    return Graph(8, G8_EDGES)
