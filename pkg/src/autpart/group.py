"""Permutations, union-find orbits and generator bookkeeping.

Composition is applied left to right: ``compose(a, b)(x) == b(a(x))``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm, prod
from typing import Iterable, Optional, Sequence


class Permutation:
    """A bijection of 1..n stored as its image sequence."""

    __slots__ = ("image",)

    def __init__(self, image: Sequence[int]):
        image = tuple(image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError("image is not a permutation of 1..n")
        self.image = image

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        image = list(range(1, n + 1))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                image[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(image)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def __len__(self) -> int:
        return len(self.image)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation({cycle_form(self)})"

    def is_identity(self) -> bool:
        return all(y == i for i, y in enumerate(self.image, 1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, y in enumerate(self.image, 1):
            inv[y - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * (len(self.image) + 1)
        out = []
        for x in range(1, len(self.image) + 1):
            if seen[x]:
                continue
            cyc = [x]
            seen[x] = True
            y = self(x)
            while y != x:
                seen[y] = True
                cyc.append(y)
                y = self(y)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def support(self) -> list[int]:
        return [i for i, y in enumerate(self.image, 1) if y != i]


def compose(a: Permutation, b: Permutation) -> Permutation:
    if len(a) != len(b):
        raise ValueError("permutations of different degree")
    return Permutation(b.image[y - 1] for y in a.image)


def cycle_form(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def parse_cycles(n: int, text: str) -> Permutation:
    text = text.strip()
    cycles = []
    for chunk in text.replace(" ", "").split(")"):
        chunk = chunk.lstrip("(")
        if chunk:
            cycles.append([int(t) for t in chunk.split(",")])
    return Permutation.from_cycles(n, cycles)


def chain_order(factors: Iterable[int]) -> int:
    factors = list(factors)
    if any(f < 1 for f in factors):
        raise ValueError("orbit lengths must be >= 1")
    return prod(factors)


class OrbitSet:
    """Union-find over 1..n; every class is represented by its minimum."""

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True

    def same(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def orbit_size(self, x: int) -> int:
        return self.size[self.find(x)]

    def orbit(self, x: int) -> list[int]:
        r = self.find(x)
        return [v for v in range(1, self.n + 1) if self.find(v) == r]

    def orbits(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(self.find(v), []).append(v)
        return [groups[r] for r in sorted(groups)]

    def copy(self) -> "OrbitSet":
        other = OrbitSet.__new__(OrbitSet)
        other.n = self.n
        other.parent = list(self.parent)
        other.size = list(self.size)
        return other


def orbits_of(n: int, gens: Iterable[Permutation]) -> list[list[int]]:
    uf = OrbitSet(n)
    for p in gens:
        for x in range(1, n + 1):
            uf.union(x, p(x))
    return uf.orbits()


def format_orbits(orbits: Iterable[Sequence[int]]) -> str:
    return " ".join("{" + ",".join(map(str, sorted(o))) + "}"
                    for o in sorted(orbits, key=min))


@dataclass
class GeneratorRecord:
    perm: Permutation
    kind: str  # "proper" or "mutual"
    level: int


@dataclass
class DiscoveryEvent:
    """One accepted generator and what it did to its anchor's orbit."""

    level: int
    anchor: int
    orbit_before: int
    orbit_after: int
    kind: str


class GroupAccumulator:
    """Generators, their orbits, and the order as a product of orbit lengths.

    ``check`` is the automorphism test applied on insertion; pass ``None``
    only when the caller has already verified the permutation.
    """

    def __init__(self, n: int, check=None):
        self.n = n
        self.check = check
        self.generators: list[GeneratorRecord] = []
        self.orbits = OrbitSet(n)
        self.factors: list[int] = []
        self.log: list[DiscoveryEvent] = []

    @property
    def order(self) -> int:
        return chain_order(self.factors)

    def add_generator(self, p: Permutation, kind: str = "proper", level: int = 0,
                      anchor: Optional[int] = None) -> bool:
        if len(p) != self.n:
            raise ValueError("generator degree mismatch")
        if self.check is not None and not self.check(p):
            raise ValueError(f"{cycle_form(p)} is not an automorphism")
        before = self.orbits.orbit_size(anchor) if anchor is not None else 0
        merged = False
        for x in range(1, self.n + 1):
            if self.orbits.union(x, p(x)):
                merged = True
        if merged:
            self.generators.append(GeneratorRecord(p, kind, level))
            if anchor is not None:
                self.log.append(DiscoveryEvent(level, anchor, before,
                                               self.orbits.orbit_size(anchor), kind))
        return merged

    def reset(self) -> None:
        self.generators = []
        self.orbits = OrbitSet(self.n)
        self.factors = []
        self.log = []

    def perms(self) -> list[Permutation]:
        return [r.perm for r in self.generators]

    def orbit_list(self) -> list[list[int]]:
        return self.orbits.orbits()
