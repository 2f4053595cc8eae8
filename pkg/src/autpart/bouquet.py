"""Hash-coded storage of mutually non-equivalent numberings.

Only ``(code, base, owner)`` is kept per entry. The full numbering is
replayed from the base whenever an equal-code candidate must be compared.

An owner is the base prefix ``(x_1, ..., x_L)`` of the node the entry was
stored under; the entry then belongs to the bouquet of every path that is a
prefix of its base, which gives the nesting B(x_1) >= B(x_1,x_2) >= ... for
free.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph
from .group import Permutation
from .partition import (OrderedPartition, PartitionError, code, match_numberings,
                        refine, transform)

DEFAULT_MAX_ENTRIES = 50_000_000


class BouquetOverflow(RuntimeError):
    pass


class ReplayError(RuntimeError):
    """A stored base no longer reproduces a valid numbering."""


@dataclass(frozen=True)
class CodedNumbering:
    code: int
    base: tuple[int, ...]
    owner: tuple[int, ...]

    @property
    def level(self) -> int:
        return len(self.owner)

    @property
    def root(self) -> int:
        return self.owner[-1]


def regenerate(g: Graph, pi1: OrderedPartition, base: Sequence[int]) -> OrderedPartition:
    """Fold transform+refine over ``base`` starting from ``pi1``."""
    if not base:
        if pi1.is_discrete():
            return pi1
        raise ReplayError("empty base on a non-discrete partition")
    p = pi1
    for x in base:
        try:
            p = refine(g, transform(p, x))
        except PartitionError as exc:
            raise ReplayError(f"base {tuple(base)}: {exc}") from None
    if not p.is_discrete():
        raise ReplayError(f"base {tuple(base)} does not reach a discrete partition")
    return p


class BouquetStore:
    def __init__(self, g: Graph, pi1: OrderedPartition,
                 max_entries: int = DEFAULT_MAX_ENTRIES):
        self.g = g
        self.pi1 = pi1
        self.max_entries = max_entries
        self.buckets: dict[int, list[CodedNumbering]] = {}
        self.entries: list[CodedNumbering] = []
        self.level_sizes: Counter = Counter()
        self.comparisons = 0
        self.regenerations = 0

    def __len__(self) -> int:
        return len(self.entries)

    def _replay(self, entry: CodedNumbering) -> OrderedPartition:
        self.regenerations += 1
        p = regenerate(self.g, self.pi1, entry.base)
        if code(self.g, p) != entry.code:
            raise ReplayError(f"base {entry.base} replays to a different code")
        return p

    def bouquet(self, path: Sequence[int]) -> list[CodedNumbering]:
        path = tuple(path)
        return [e for e in self.entries if e.base[:len(path)] == path]

    def find_automorphism(self, numbering: OrderedPartition,
                          owners: Iterable[Sequence[int]],
                          numbering_code: Optional[int] = None):
        """First verified automorphism onto ``numbering`` from an entry whose base
        starts with one of ``owners``; returns ``(perm, root, entry)`` or None.

        The permutation maps the stored numbering onto ``numbering``.
        """
        owners = {tuple(o) for o in owners}
        if not owners:
            return None
        c = code(self.g, numbering) if numbering_code is None else numbering_code
        lengths = {len(o) for o in owners}
        for entry in self.buckets.get(c, ()):
            hit = next((entry.base[:k] for k in lengths if entry.base[:k] in owners), None)
            if hit is None:
                continue
            self.comparisons += 1
            p = match_numberings(self.g, self._replay(entry), numbering)
            if p is not None:
                return p, hit[-1], entry
        return None

    def insert(self, numbering: OrderedPartition, base: Sequence[int],
               owner: Sequence[int], numbering_code: Optional[int] = None) -> bool:
        """Store ``numbering`` unless an equivalent one already sits in ``owner``'s bouquet."""
        base, owner = tuple(base), tuple(owner)
        if base[:len(owner)] != owner:
            raise ValueError("owner must be a prefix of the base")
        c = code(self.g, numbering) if numbering_code is None else numbering_code
        if self.find_automorphism(numbering, [owner], c) is not None:
            return False
        if len(self.entries) >= self.max_entries:
            raise BouquetOverflow(f"bouquet store exceeded {self.max_entries} entries")
        entry = CodedNumbering(c, base, owner)
        self.buckets.setdefault(c, []).append(entry)
        self.entries.append(entry)
        self.level_sizes[len(owner)] += 1
        return True

    def dump(self) -> str:
        return "".join(f"{e.level} {e.root} {e.code} {' '.join(map(str, e.base))}\n"
                       for e in self.entries)
