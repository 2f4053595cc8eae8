"""Ordered partitions, base-cell refinement and partition codes.

A cell's label is the 1-based position of its first vertex, so splitting a
cell never relabels the cells around it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .graph import Graph, is_automorphism


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class OrderedPartition:
    order: tuple[int, ...]
    labels: tuple[int, ...]  # labels[i] = label of the cell holding position i+1

    @classmethod
    def from_cells(cls, cells: Iterable[Sequence[int]]) -> "OrderedPartition":
        order: list[int] = []
        labels: list[int] = []
        for cell in cells:
            if not cell:
                raise PartitionError("empty cell")
            start = len(order) + 1
            order.extend(cell)
            labels.extend([start] * len(cell))
        if sorted(order) != list(range(1, len(order) + 1)):
            raise PartitionError("cells do not partition 1..n")
        return cls(tuple(order), tuple(labels))

    @classmethod
    def parse(cls, text: str) -> "OrderedPartition":
        """Inverse of ``str``: ``"|1|7,8|5,6|"``."""
        body = text.strip().strip("|")
        return cls.from_cells([int(v) for v in c.split(",")] for c in body.split("|"))

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def _pos(self) -> list[int]:
        pos = [0] * (len(self.order) + 1)
        for i, v in enumerate(self.order):
            pos[v] = i + 1
        return pos

    def position(self, v: int) -> int:
        """1-based index of ``v`` in the order sequence."""
        return self._pos[v]

    def label(self, v: int) -> int:
        return self.labels[self._pos[v] - 1]

    @cached_property
    def cell_starts(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.labels)))

    def cell(self, label: int) -> tuple[int, ...]:
        i = label - 1
        j = i
        while j < len(self.order) and self.labels[j] == label:
            j += 1
        return self.order[i:j]

    def cells(self) -> list[tuple[int, ...]]:
        return [self.cell(s) for s in self.cell_starts]

    def num_cells(self) -> int:
        return len(self.cell_starts)

    def is_discrete(self) -> bool:
        return self.num_cells() == len(self.order)

    def __str__(self) -> str:
        return "|" + "|".join(",".join(map(str, c)) for c in self.cells()) + "|"


def unit_partition(n: int) -> OrderedPartition:
    if n < 1:
        raise PartitionError("unit partition needs n >= 1")
    return OrderedPartition(tuple(range(1, n + 1)), (1,) * n)


def is_discrete(p: OrderedPartition) -> bool:
    return p.is_discrete()


def transform(p: OrderedPartition, x: int) -> OrderedPartition:
    """Split ``x`` off its cell: ``x`` keeps label i, the rest get i+1."""
    label = p.label(x)
    cell = p.cell(label)
    if len(cell) == 1:
        raise PartitionError(f"vertex {x} is already a singleton cell")
    i = label - 1
    order = list(p.order)
    order[i:i + len(cell)] = [x] + [v for v in cell if v != x]
    labels = list(p.labels)
    for j in range(i + 1, i + len(cell)):
        labels[j] = label + 1
    return OrderedPartition(tuple(order), tuple(labels))


def move_to_front(p: OrderedPartition, x: int) -> OrderedPartition:
    """Reorder ``x``'s cell so ``x`` is its first vertex; labels are unchanged."""
    label = p.label(x)
    cell = p.cell(label)
    order = list(p.order)
    order[label - 1:label - 1 + len(cell)] = [x] + [v for v in cell if v != x]
    return OrderedPartition(tuple(order), p.labels)


def refine(g: Graph, p: OrderedPartition) -> OrderedPartition:
    """Adjacency refinement with a base cell.

    Cells are split by the number of neighbors in the base cell, sorted
    increasingly with a stable counting sort. After a round that splits
    anything, the next base is the shortest new subcell (smallest label on
    ties); otherwise the next base comes off the FIFO queue.
    """
    n = g.n
    if p.n != n:
        raise PartitionError("partition size differs from the graph order")
    order = list(p.order)
    cellof = [0] * (n + 1)  # 0-based start index of the cell holding v
    pos = [0] * (n + 1)
    end: dict[int, int] = {}  # cell start -> one past its last index
    for i, v in enumerate(order):
        s = p.labels[i] - 1
        cellof[v] = s
        pos[v] = i
        end[s] = i + 1

    queue = deque(sorted(end))
    queued = set(queue)
    count = [0] * (n + 1)
    base: Optional[int] = queue.popleft()
    queued.discard(base)

    while base is not None:
        members = order[base:end[base]]
        touched: list[int] = []
        hit: list[int] = []
        for u in members:
            for w in g.adj(u):
                if count[w] == 0:
                    hit.append(w)
                    s = cellof[w]
                    if s not in touched:
                        touched.append(s)
                count[w] += 1
        new_cells: list[int] = []
        for s in sorted(touched):
            e = end[s]
            cell = order[s:e]
            keys = [count[v] for v in cell]
            lo, hi = min(keys), max(keys)
            if lo == hi:
                continue
            # counting sort, stable, keys in 0..|B|
            buckets: list[list[int]] = [[] for _ in range(hi - lo + 1)]
            for v, key in zip(cell, keys):
                buckets[key - lo].append(v)
            i = s
            for bucket in buckets:
                if not bucket:
                    continue
                start = i
                for v in bucket:
                    order[i] = v
                    pos[v] = i
                    cellof[v] = start
                    i += 1
                end[start] = i
                new_cells.append(start)
        for w in hit:
            count[w] = 0
        for s in new_cells:
            if s not in queued:
                queue.append(s)
                queued.add(s)
        if new_cells:
            base = min(new_cells, key=lambda s: (end[s] - s, s))
            if base in queued:
                queue.remove(base)
                queued.discard(base)
        elif queue:
            base = queue.popleft()
            queued.discard(base)
        else:
            base = None

    labels = [0] * n
    for s, e in end.items():
        for i in range(s, e):
            labels[i] = s + 1
    return OrderedPartition(tuple(order), tuple(labels))


def pac_scores(g: Graph, p: OrderedPartition) -> dict[int, int]:
    """Partitioning ability of every non-trivial cell, keyed by label.

    Two cells are adjacent when at least one edge joins them; a cell with an
    internal edge is adjacent to itself.
    """
    nontrivial = {s for s in p.cell_starts if len(p.cell(s)) > 1}
    scores = {}
    for s in nontrivial:
        adjacent = set()
        for u in p.cell(s):
            for w in g.adj(u):
                t = p.label(w)
                if t in nontrivial:
                    adjacent.add(t)
        scores[s] = len(adjacent)
    return scores


def select_target_cell(g: Graph, p: OrderedPartition) -> Optional[int]:
    """Label of the non-trivial cell with maximum partitioning ability."""
    scores = pac_scores(g, p)
    if not scores:
        return None
    return min(scores, key=lambda s: (-scores[s], s))


def target_cell(g: Graph, p: OrderedPartition) -> tuple[int, ...]:
    label = select_target_cell(g, p)
    return () if label is None else p.cell(label)


def code(g: Graph, p: OrderedPartition) -> int:
    return sum(p.label(u) * p.label(v) for u, v in g.edges())


def max_code(n: int) -> int:
    if n < 1:
        raise PartitionError("n must be >= 1")
    return n * (n - 1) * (n + 1) * (3 * n + 2) // 24


def numbering_map(a: OrderedPartition, b: OrderedPartition) -> list[int]:
    """image[v] for the map sending a's k-th vertex to b's k-th vertex."""
    image = [0] * (a.n + 1)
    for x, y in zip(a.order, b.order):
        image[x] = y
    return image


def match_numberings(g: Graph, a: OrderedPartition, b: OrderedPartition):
    """The automorphism sending ``a`` onto ``b`` position by position, or None."""
    from .group import Permutation

    if not (a.is_discrete() and b.is_discrete()):
        raise PartitionError("match_numberings needs two discrete partitions")
    p = Permutation(numbering_map(a, b)[1:])
    return p if is_automorphism(g, p) else None
