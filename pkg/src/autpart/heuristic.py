"""Sampled-tree estimate of the automorphism group (no exactness guarantee).

A single path ("highway") of partitions is built. At each basic level a
fork compares one numbering per vertex of the target cell, then small
regular selection trees are grown below representatives of the smallest
orbits. Every merge comes from a verified automorphism, so reported orbits
are always subsets of the true ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Optional

from .graph import Graph
from .group import GeneratorRecord, OrbitSet, Permutation
from .partition import (OrderedPartition, code, match_numberings, refine, target_cell,
                        transform, unit_partition)
from .search import AutResult, SearchMetrics, sfm1a


@dataclass
class HeurConfig:
    k1: float = 0.35
    nm2: int = 5

    def __post_init__(self):
        if not 0 < self.k1 <= 1:
            raise ValueError("k1 must lie in (0, 1]")
        if self.nm2 < 1:
            raise ValueError("nm2 must be >= 1")


@dataclass
class HighwayState:
    parts: list[OrderedPartition] = field(default_factory=list)
    cells: list[tuple[int, ...]] = field(default_factory=list)
    chosen: list[int] = field(default_factory=list)
    rows: list[OrbitSet] = field(default_factory=list)
    gens: list[tuple[int, Permutation]] = field(default_factory=list)  # (level, perm)

    def truncate(self, L: int) -> None:
        """Keep levels 1..L; level L loses its chosen vertex."""
        del self.parts[L:]
        del self.cells[L:]
        del self.rows[L:]
        del self.chosen[L - 1:]


@dataclass
class HeurResult(AutResult):
    table: list[list[list[int]]] = field(default_factory=list)
    base: list[int] = field(default_factory=list)


def rst_sample(sc, nm2: int) -> list[int]:
    step = max(1, len(sc) // nm2)
    return list(sc[::step][:nm2])


def _record(state: HighwayState, L: int, p: Permutation, n: int):
    """Add ``p`` found at level L to rows 1..L; return (merged at L, lowest merged level < L)."""
    state.gens.append((L, p))
    jump = None
    merged_here = False
    for LL in range(1, L + 1):
        row = state.rows[LL - 1]
        merged = False
        for v in range(1, n + 1):
            if row.union(v, p(v)):
                merged = True
        if merged and LL < L and jump is None:
            jump = LL
        if merged and LL == L:
            merged_here = True
    return merged_here, jump


def table_step(g: Graph, state: HighwayState, L: int, cfg: HeurConfig,
               metrics: Optional[SearchMetrics] = None) -> Optional[int]:
    """Fill orbit row L; return a lower level to jump back to, or None."""
    part = state.parts[L - 1]
    sc = state.cells[L - 1]
    row = state.rows[L - 1]
    kept: dict[int, list[OrderedPartition]] = {}

    def consider(leaf: OrderedPartition):
        c = code(g, leaf)
        for other in kept.get(c, ()):
            p = match_numberings(g, other, leaf)
            if p is not None:
                return _record(state, L, p, g.n)
        kept.setdefault(c, []).append(leaf)
        return False, None

    # fork
    for v in sc:
        leaf, _ = sfm1a(g, part, v, metrics)
        _, jump = consider(leaf)
        if jump is not None:
            return jump

    def orbit_reps(done: set[int]):
        groups: dict[int, list[int]] = {}
        for v in sc:
            groups.setdefault(row.find(v), []).append(v)
        reps = [(len(m), sc.index(m[0]), m[0]) for m in groups.values()
                if not any(u in done for u in m)]
        return [r for _, _, r in sorted(reps)]

    nmorb = len({row.find(v) for v in sc})
    nm1 = ceil(cfg.k1 * nmorb)
    done: set[int] = set()
    idle = 0

    def grow(p: OrderedPartition):
        if p.is_discrete():
            return consider(p)
        merged_any = False
        for x in rst_sample(target_cell(g, p), cfg.nm2):
            if metrics is not None:
                metrics.refinements += 1
            merged, jump = grow(refine(g, transform(p, x)))
            merged_any |= merged
            if jump is not None:
                return merged_any, jump
        return merged_any, None

    while idle < nm1:
        reps = orbit_reps(done)
        if not reps:
            break
        r = reps[0]
        done.add(r)
        merged, jump = grow(refine(g, transform(part, r)))
        if jump is not None:
            return jump
        idle = 0 if merged else idle + 1
    return None


def _fresh_row(state: HighwayState, n: int) -> OrbitSet:
    """Orbits of the already known generators that fix the current prefix."""
    row = OrbitSet(n)
    prefix = state.chosen
    for _, p in state.gens:
        if all(p(x) == x for x in prefix):
            for v in range(1, n + 1):
                row.union(v, p(v))
    return row


def heuraut(g: Graph, initial: Optional[OrderedPartition] = None,
            cfg: Optional[HeurConfig] = None,
            metrics: Optional[SearchMetrics] = None) -> HeurResult:
    cfg = cfg or HeurConfig()
    metrics = metrics if metrics is not None else SearchMetrics()
    n = g.n
    if n == 0:
        return HeurResult(0, [], [], 1, [], metrics, exact=False)
    pi1 = refine(g, initial or unit_partition(n))
    state = HighwayState()
    state.parts.append(pi1)
    L = 1
    while True:
        part = state.parts[L - 1]
        sc = target_cell(g, part)
        if not sc:
            break
        if len(state.cells) < L:
            state.cells.append(sc)
            state.rows.append(_fresh_row(state, n))
            jump = table_step(g, state, L, cfg, metrics)
            if jump is not None:
                state.truncate(jump)
                L = jump
                continue
        row = state.rows[L - 1]
        x = min(sc, key=lambda v: (row.orbit_size(v), sc.index(v)))
        state.chosen.append(x)
        state.parts.append(refine(g, transform(part, x)))
        metrics.refinements += 1
        L += 1
    metrics.max_lk = max(metrics.max_lk, len(state.parts))

    factors = [state.rows[i].orbit_size(x) for i, x in enumerate(state.chosen)]
    order = 1
    for f in factors:
        order *= f
    sifted = OrbitSet(n)
    gens = []
    for level, p in sorted(state.gens, key=lambda t: -t[0]):
        merged = False
        for v in range(1, n + 1):
            if sifted.union(v, p(v)):
                merged = True
        if merged:
            gens.append(GeneratorRecord(p, "proper", level))
    table = [row.orbits() for row in state.rows]
    return HeurResult(n, gens, sifted.orbits(), order, factors, metrics,
                      exact=False, note="exact: unverified", table=table,
                      base=list(state.chosen))
