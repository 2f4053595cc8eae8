"""Exact search: partition towers, bouquet-backed backtracking and the driver.

Levels are 1-based: ``levels[L-1]`` holds Pi_L, its target cell SC(L) and
the cursor of the selected vertex X_L. The discrete partition at the bottom
is Pi_LK, so ``LK == len(levels) + 1``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Optional, Sequence

from .bouquet import DEFAULT_MAX_ENTRIES, BouquetStore
from .graph import (Graph, complement, is_automorphism, is_complete, is_connected,
                    is_empty, in_class_h)
from .group import (GeneratorRecord, GroupAccumulator, OrbitSet, Permutation,
                    cycle_form)
from .partition import (OrderedPartition, move_to_front, refine, target_cell,
                        transform, unit_partition)


class UnsupportedDecomposition(ValueError):
    """The graph needs a component decomposition this package does not implement."""


@dataclass
class SearchConfig:
    max_bouquet: int = DEFAULT_MAX_ENTRIES
    # "stabilizer": skip a vertex only via generators fixing the current prefix.
    # "group": skip via orbits of the whole running group (unguarded variant).
    skip_rule: str = "stabilizer"
    start: str = "heuristic"  # or "first"
    trace: Optional[Callable[[str], None]] = None

    def __post_init__(self):
        if self.skip_rule not in ("stabilizer", "group"):
            raise ValueError(f"unknown skip rule {self.skip_rule!r}")
        if self.start not in ("heuristic", "first"):
            raise ValueError(f"unknown start rule {self.start!r}")


@dataclass
class SearchMetrics:
    refinements: int = 0
    comparisons: int = 0
    leaves: int = 0
    max_lk: int = 0
    cases: Counter = field(default_factory=Counter)
    cell_sizes: Counter = field(default_factory=Counter)  # level -> largest SC seen
    bouquet_sizes: dict = field(default_factory=dict)
    chain_anomalies: int = 0
    # (level, accepted mutual generators, final orbit length of the anchor)
    mutual_audit: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "refinements": self.refinements,
            "comparisons": self.comparisons,
            "leaves": self.leaves,
            "max_lk": self.max_lk,
            "cases": {f"CS{k}": self.cases.get(k, 0) for k in (1, 2, 3, 4)},
            "cell_sizes": dict(sorted(self.cell_sizes.items())),
            "bouquet_sizes": dict(sorted(self.bouquet_sizes.items())),
            "chain_anomalies": self.chain_anomalies,
        }


@dataclass
class AutResult:
    n: int
    generators: list[GeneratorRecord]
    orbits: list[list[int]]
    order: int
    factors: list[int]
    metrics: SearchMetrics = field(default_factory=SearchMetrics)
    exact: bool = True
    note: str = ""

    def perms(self) -> list[Permutation]:
        return [r.perm for r in self.generators]


@dataclass
class Tower:
    partitions: list[OrderedPartition]  # Pi_1 .. Pi_LK
    base: list[int]

    @property
    def lk(self) -> int:
        return len(self.partitions)


def _step(g: Graph, p: OrderedPartition, x: int, metrics: Optional[SearchMetrics]):
    if metrics is not None:
        metrics.refinements += 1
    return refine(g, transform(p, x))


def run_a1(g: Graph, start: Optional[OrderedPartition] = None, chooser=None,
           metrics: Optional[SearchMetrics] = None) -> Tower:
    """Individualize and refine until discrete; ``chooser(sc)`` picks from SC."""
    p = refine(g, start or unit_partition(g.n))
    parts, base = [p], []
    while not p.is_discrete():
        sc = target_cell(g, p)
        x = chooser(sc) if chooser else sc[0]
        base.append(x)
        p = _step(g, p, x, metrics)
        parts.append(p)
    if metrics is not None:
        metrics.max_lk = max(metrics.max_lk, len(parts))
    return Tower(parts, base)


def run_a2(g: Graph, start: Optional[OrderedPartition] = None):
    """Every leaf of the full search tree in preorder as ``(base, numbering)``."""
    pi1 = refine(g, start or unit_partition(g.n))
    out = []

    def visit(p, base):
        if p.is_discrete():
            out.append((tuple(base), p))
            return
        for x in target_cell(g, p):
            visit(refine(g, transform(p, x)), base + [x])

    visit(pi1, [])
    return out


def sfm1a(g: Graph, part: OrderedPartition, x: int,
          metrics: Optional[SearchMetrics] = None):
    """First numbering below ``x``: returns ``(leaf, base_suffix)`` with x first."""
    if x not in target_cell(g, part):
        raise ValueError(f"vertex {x} is not in the target cell")
    base = [x]
    p = _step(g, part, x, metrics)
    while not p.is_discrete():
        sc = target_cell(g, p)
        base.append(sc[0])
        p = _step(g, p, sc[0], metrics)
    return p, base


@dataclass
class LevelState:
    part: OrderedPartition
    sc: tuple[int, ...]
    cursor: int = 0
    roots: list[int] = field(default_factory=list)  # FRPO at this level

    @property
    def x(self) -> int:
        return self.sc[self.cursor]


@dataclass
class SearchState:
    levels: list[LevelState]
    lp: int = 1
    lmin: int = 1
    xf: int = 0
    factors: list[int] = field(default_factory=list)  # pushed deepest first
    group: Optional[GroupAccumulator] = None
    mutual: Counter = field(default_factory=Counter)
    leaf: Optional[OrderedPartition] = None

    @property
    def lk(self) -> int:
        return len(self.levels) + 1

    def base(self, upto: Optional[int] = None) -> tuple[int, ...]:
        return tuple(lv.x for lv in self.levels[:upto])

    def level(self, L: int) -> LevelState:
        return self.levels[L - 1]


class _Part1:
    """Stabilizer of x_1 and its bouquet, by backtracking with case analysis."""

    def __init__(self, g, pi1, x1, store, cfg, metrics):
        self.g = g
        self.store = store
        self.cfg = cfg
        self.metrics = metrics
        sc1 = target_cell(g, pi1)
        self.state = SearchState(levels=[LevelState(pi1, sc1, 0, [])])
        assert sc1[0] == x1

    def trace(self, msg: str) -> None:
        if self.cfg.trace:
            self.cfg.trace(msg)

    # -- forward moves ---------------------------------------------------

    def sfm1(self) -> Fraction:
        """Extend the tower below X_LP with first vertices; return the chain value."""
        st, g = self.state, self.g
        del st.levels[st.lp:]
        p = st.level(st.lp).part
        x = st.level(st.lp).x
        while True:
            p = _step(g, p, x, self.metrics)
            if p.is_discrete():
                break
            sc = target_cell(g, p)
            st.levels.append(LevelState(p, sc, 0, []))
            L = len(st.levels)
            self.metrics.cell_sizes[L] = max(self.metrics.cell_sizes[L], len(sc))
            x = sc[0]
        st.leaf = p
        self.metrics.leaves += 1
        self.metrics.max_lk = max(self.metrics.max_lk, st.lk)
        return self.chain(st.group.orbits)

    def anchor_order(self, orbits: OrbitSet) -> int:
        st = self.state
        prod = 1
        for f in st.factors:
            prod *= f
        return prod * orbits.orbit_size(st.xf)

    def corb(self, orbits: OrbitSet, L: int, v: int) -> int:
        sc = self.state.level(L).sc
        r = orbits.find(v)
        return sum(1 for u in sc if orbits.find(u) == r)

    def chain(self, orbits: OrbitSet) -> Fraction:
        st = self.state
        value = Fraction(self.anchor_order(orbits))
        for L in range(st.lmin, st.lk):
            value /= self.corb(orbits, L, st.level(L).x)
        return value

    # -- selection ---------------------------------------------------------

    def skip_orbits(self, L: int) -> OrbitSet:
        st = self.state
        if self.cfg.skip_rule == "group":
            return st.group.orbits
        prefix = st.base(L - 1)
        uf = OrbitSet(self.g.n)
        for p in st.group.perms():
            if all(p(x) == x for x in prefix):
                for v in range(1, self.g.n + 1):
                    uf.union(v, p(v))
        return uf

    def select(self) -> bool:
        st = self.state
        lv = st.level(st.lp)
        orbits = self.skip_orbits(st.lp)
        seen_reps = {orbits.find(u) for u in lv.sc[:lv.cursor + 1]}
        for j in range(lv.cursor + 1, len(lv.sc)):
            r = orbits.find(lv.sc[j])
            if r in seen_reps:
                continue
            lv.cursor = j
            self.trace(f"L={st.lp} select {lv.sc[j]}")
            return True
        return False

    # -- comparison --------------------------------------------------------

    def comp(self, chain: Fraction) -> int:
        st, store = self.state, self.store
        lp = st.lp
        prefix = st.base(lp - 1)
        owners = [prefix + (z,) for z in st.level(lp).roots]
        before = store.comparisons
        hit = store.find_automorphism(st.leaf, owners)
        self.metrics.comparisons += store.comparisons - before
        if hit is None:
            if chain > 1:
                self.metrics.chain_anomalies += 1
            case = 3 if chain < 1 else 1
            owner = st.base(lp)
            store.insert(st.leaf, st.base(), owner)
            for L in range(lp, st.lk):
                st.level(L).roots.append(st.level(L).x)
            st.lp = st.lk - 1
            if case == 3:
                self.new_top_point(st.lp)
            elif st.lp < st.lmin:
                st.lmin = st.lp
            self.trace(f"CS{case} at LP={lp}")
            return case

        alpha, _root, _entry = hit
        old = st.group.orbits.copy()
        kind = "mutual" if lp == st.lmin else "proper"
        merged = st.group.add_generator(alpha, kind=kind, level=lp, anchor=st.xf)
        if merged:
            self.trace(f"gen {cycle_form(alpha)}")
            if kind == "mutual":
                st.mutual[lp] += 1
        case = 4 if merged and lp > st.lmin and self.order_drop(old) else 2
        self.trace(f"CS{case} at LP={lp}")
        return case

    def order_drop(self, old: OrbitSet) -> bool:
        """Does adding the last generator lower the estimated order of any root?"""
        st, new = self.state, self.state.group.orbits
        a_old = Fraction(self.anchor_order(old))
        a_new = Fraction(self.anchor_order(new))
        for L in range(st.lmin, st.lp + 1):
            if L > st.lmin:
                for z in st.level(L).roots:
                    if a_new / self.corb(new, L, z) < a_old / self.corb(old, L, z):
                        return True
            x = st.level(L).x
            a_old /= self.corb(old, L, x)
            a_new /= self.corb(new, L, x)
        return False

    def new_top_point(self, L: int) -> None:
        st = self.state
        st.lmin = L
        st.xf = st.level(L).x
        st.factors = []
        st.group.reset()
        st.mutual = Counter()

    # -- driver ------------------------------------------------------------

    def run(self) -> SearchState:
        st = self.state
        st.group = GroupAccumulator(self.g.n)
        x1 = st.level(1).x
        self.trace(f"L=1 select {x1}")
        st.lp = 1
        self.sfm1()
        self.store.insert(st.leaf, st.base(), st.base())
        for lv in st.levels:
            lv.roots.append(lv.x)
        st.lp = st.lmin = st.lk - 1
        st.xf = st.level(st.lmin).x
        if st.lp == 1:
            return st
        while True:
            if self.select():
                chain = self.sfm1()
                case = self.comp(chain)
                self.metrics.cases[case] += 1
                continue
            # backward move
            st.lp -= 1
            if st.lp < st.lmin:
                self.close_anchor()
                if st.lp == 1:
                    return st
                st.lmin = st.lp
                st.xf = st.level(st.lp).x

    def close_anchor(self) -> None:
        """Record |Orb(XF)| for the level being left as a chain factor."""
        st = self.state
        f = st.group.orbits.orbit_size(st.xf)
        st.factors.append(f)
        self.metrics.mutual_audit.append((st.lmin, st.mutual[st.lmin], f))


def part1(g: Graph, pi1: OrderedPartition, x1: int, store: BouquetStore,
          cfg: Optional[SearchConfig] = None,
          metrics: Optional[SearchMetrics] = None) -> SearchState:
    """Generators and order factors of the stabilizer of ``x1``; fills ``store``.

    ``pi1`` must already have ``x1`` first in its target cell.
    """
    cfg = cfg or SearchConfig()
    metrics = metrics if metrics is not None else SearchMetrics()
    engine = _Part1(g, pi1, x1, store, cfg, metrics)
    return engine.run()


def part2(g: Graph, pi1: OrderedPartition, x1: int, stab: GroupAccumulator,
          store: BouquetStore, cfg: Optional[SearchConfig] = None,
          metrics: Optional[SearchMetrics] = None) -> GroupAccumulator:
    """Extend the stabilizer of ``x1`` to the whole group through SC(Pi_1)."""
    cfg = cfg or SearchConfig()
    metrics = metrics if metrics is not None else SearchMetrics()
    acc = GroupAccumulator(g.n)
    for rec in stab.generators:
        acc.add_generator(rec.perm, kind=rec.kind, level=rec.level)
    sc = target_cell(g, pi1)
    mutual = 0
    for j in range(1, len(sc)):
        x = sc[j]
        if any(acc.orbits.same(x, u) for u in sc[:j]):
            continue
        if cfg.trace:
            cfg.trace(f"L=1 select {x}")
        leaf, _ = sfm1a(g, pi1, x, metrics)
        metrics.leaves += 1
        before = store.comparisons
        hit = store.find_automorphism(leaf, [(x1,)])
        metrics.comparisons += store.comparisons - before
        if hit is not None:
            alpha = hit[0]
            if acc.add_generator(alpha, kind="mutual", level=1, anchor=x1):
                mutual += 1
                if cfg.trace:
                    cfg.trace(f"gen {cycle_form(alpha)}")
    metrics.mutual_audit.append((1, mutual, acc.orbits.orbit_size(x1)))
    return acc


def _symmetric_result(g: Graph, cells: Sequence[Sequence[int]], note: str) -> AutResult:
    """Aut of a complete or empty graph with the given cells: a product of symmetric groups."""
    n = g.n
    gens, factors = [], []
    for cell in cells:
        m = len(cell)
        if m < 2:
            continue
        gens.append(GeneratorRecord(Permutation.from_cycles(n, [cell[:2]]), "proper", 1))
        if m > 2:
            gens.append(GeneratorRecord(Permutation.from_cycles(n, [list(cell)]), "proper", 1))
        factors.extend(range(m, 1, -1))
    order = 1
    for cell in cells:
        order *= factorial(len(cell))
    orbits = sorted((sorted(c) for c in cells), key=min)
    return AutResult(n, gens, orbits, order, factors, note=note)


def _trivial(n: int, note: str) -> AutResult:
    return AutResult(n, [], [[v] for v in range(1, n + 1)], 1, [], note=note)


def choose_start(g: Graph, pi1: OrderedPartition, cfg: SearchConfig) -> int:
    sc = target_cell(g, pi1)
    if cfg.start == "first":
        return sc[0]
    from .heuristic import heuraut

    try:
        est = heuraut(g, pi1)
    except Exception:  # heuristic trouble only costs speed
        return sc[0]
    size = {v: len(o) for o in est.orbits for v in o}
    return min(sc, key=lambda v: (size[v], sc.index(v)))


def vseparn_core(g: Graph, initial: Optional[OrderedPartition] = None,
                 cfg: Optional[SearchConfig] = None) -> AutResult:
    """Generators, orbits and order of Aut(g, initial) without any graph-class gate."""
    cfg = cfg or SearchConfig()
    metrics = SearchMetrics()
    n = g.n
    if n == 0:
        return AutResult(0, [], [], 1, [], metrics)
    start = initial or unit_partition(n)
    pi1 = refine(g, start)
    metrics.refinements += 1
    if pi1.is_discrete():
        if cfg.trace:
            cfg.trace("Trivial group")
        res = _trivial(n, "trivial group")
        res.metrics = metrics
        metrics.max_lk = 1
        return res
    if is_complete(g) or is_empty(g):
        note = ("complete graph: complement is empty, answered directly" if g.k
                else "empty graph: answered directly")
        res = _symmetric_result(g, pi1.cells(), note)
        res.metrics = metrics
        return res
    x1 = choose_start(g, pi1, cfg)
    pi1 = move_to_front(pi1, x1)
    store = BouquetStore(g, pi1, cfg.max_bouquet)
    st = part1(g, pi1, x1, store, cfg, metrics)
    acc = part2(g, pi1, x1, st.group, store, cfg, metrics)
    metrics.bouquet_sizes = dict(store.level_sizes)
    orb = acc.orbits.orbit_size(x1)
    factors = [orb] + list(reversed(st.factors))
    acc.factors = factors
    for rec in acc.generators:
        if not is_automorphism(g, rec.perm):
            raise AssertionError(f"internal error: {cycle_form(rec.perm)} is not an automorphism")
    return AutResult(n, acc.generators, acc.orbit_list(), acc.order, factors, metrics)


def vseparn(g: Graph, initial: Optional[OrderedPartition] = None,
            cfg: Optional[SearchConfig] = None, gate: bool = True) -> AutResult:
    """Automorphism group of ``g`` (preserving ``initial``'s cells in order).

    With ``gate`` the graph must be connected and sparse, or dense with a
    connected complement, which is searched instead.
    """
    if not gate or g.n <= 1:
        return vseparn_core(g, initial, cfg)
    if is_complete(g) or is_empty(g):
        return vseparn_core(g, initial, cfg)
    if not is_connected(g):
        raise UnsupportedDecomposition(
            "graph is disconnected; component-wise composition is not supported")
    if in_class_h(g):
        return vseparn_core(g, initial, cfg)
    h = complement(g)
    if not is_connected(h):
        raise UnsupportedDecomposition(
            "dense graph with a disconnected complement is not supported")
    res = vseparn_core(h, initial, cfg)
    res.note = "searched the complement"
    return res
