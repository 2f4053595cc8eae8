"""Brute-force automorphism enumeration for small graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph
from .group import OrbitSet, Permutation


class OracleLimitError(ValueError):
    pass


@dataclass
class FullGroup:
    n: int
    elements: list[Permutation]  # lexicographic by image
    orbits: list[list[int]]

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, p: Permutation) -> bool:
        return p in self._set

    def __post_init__(self):
        self._set = set(self.elements)


def brute_force(g: Graph, limit: int = 10,
                cells: Optional[Sequence[Sequence[int]]] = None) -> FullGroup:
    """Every automorphism of ``g``, found by backtracking over vertex images.

    ``cells`` restricts images to the same cell (an ordered partition whose
    cells must be preserved setwise).
    """
    n = g.n
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds the oracle limit {limit}")
    colour = [0] * (n + 1)
    if cells is not None:
        for i, cell in enumerate(cells):
            for v in cell:
                colour[v] = i
    image = [0] * (n + 1)
    used = [False] * (n + 1)
    found: list[Permutation] = []

    def extend(v: int) -> None:
        if v > n:
            found.append(Permutation(image[1:]))
            return
        for w in range(1, n + 1):
            if used[w] or colour[w] != colour[v] or g.degree(w) != g.degree(v):
                continue
            # adjacency to already-mapped vertices must be preserved both ways
            if any(g.has_edge(u, v) != g.has_edge(image[u], w) for u in range(1, v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = 0

    extend(1)
    uf = OrbitSet(n)
    for p in found:
        for x in range(1, n + 1):
            uf.union(x, p(x))
    return FullGroup(n, found, uf.orbits())
