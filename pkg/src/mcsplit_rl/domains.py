"""Label classes: the compact representation of candidate target sets.

A label class ``(pattern_vertices, target_vertices)`` says that each pattern
vertex on the left may still be matched to any target vertex on the right.
A store is the tuple of all live classes; operations return new stores and
never mutate their input, so the search can backtrack by dropping a level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import AdjacencyKind, Graph, UsageError

# Order in which the groups of a split class are emitted.
SPLIT_ORDER = (AdjacencyKind.BOTH, AdjacencyKind.OUT, AdjacencyKind.IN, AdjacencyKind.NONE)


@dataclass(frozen=True)
class LabelClass:
    pattern_vertices: tuple[int, ...]
    target_vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.pattern_vertices or not self.target_vertices:
            raise UsageError("label class sides must be non-empty")

    @property
    def capacity(self) -> int:
        """Most matches this class can still contribute."""
        return min(len(self.pattern_vertices), len(self.target_vertices))


@dataclass(frozen=True)
class DomainStore:
    classes: tuple[LabelClass, ...] = ()

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __bool__(self) -> bool:
        return bool(self.classes)

    def as_set(self) -> frozenset[tuple[frozenset[int], frozenset[int]]]:
        """Order-insensitive view used for comparing stores."""
        return frozenset(
            (frozenset(c.pattern_vertices), frozenset(c.target_vertices)) for c in self.classes
        )

    def candidates(self, v: int) -> frozenset[int]:
        """Targets ``v`` may still be matched to; empty if ``v`` is in no class."""
        for c in self.classes:
            if v in c.pattern_vertices:
                return frozenset(c.target_vertices)
        return frozenset()


def make_store(pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> DomainStore:
    """Build a store from ``(pattern, target)`` pairs, skipping one-sided pairs."""
    classes = []
    for p, t in pairs:
        p, t = tuple(p), tuple(t)
        if p and t:
            classes.append(LabelClass(p, t))
    return DomainStore(tuple(classes))


def initial_classes(gp: Graph, gt: Graph) -> DomainStore:
    """One class per label present in both graphs, ordered by label value."""
    by_label_p: dict[int, list[int]] = {}
    by_label_t: dict[int, list[int]] = {}
    for v, lab in enumerate(gp.labels):
        by_label_p.setdefault(lab, []).append(v)
    for w, lab in enumerate(gt.labels):
        by_label_t.setdefault(lab, []).append(w)
    shared = sorted(by_label_p.keys() & by_label_t.keys())
    return make_store((by_label_p[lab], by_label_t[lab]) for lab in shared)


def split(store: DomainStore, gp: Graph, gt: Graph, v: int, w: int) -> DomainStore:
    """Store after matching ``v`` to ``w``.

    Every class is partitioned by the adjacency kind of its vertices towards
    ``v`` (pattern side) and ``w`` (target side); groups pair up only with the
    same kind on the other side.
    """
    if not any(v in c.pattern_vertices and w in c.target_vertices for c in store.classes):
        raise UsageError(f"({v}, {w}) is not a legal match in this store")
    prow, trow = gp.row(v), gt.row(w)
    out: list[LabelClass] = []
    for c in store.classes:
        pgroups: dict[int, list[int]] = {}
        for x in c.pattern_vertices:
            if x != v:
                pgroups.setdefault(prow[x], []).append(x)
        if not pgroups:
            continue
        tgroups: dict[int, list[int]] = {}
        for y in c.target_vertices:
            if y != w:
                tgroups.setdefault(trow[y], []).append(y)
        for kind in SPLIT_ORDER:
            p = pgroups.get(kind)
            t = tgroups.get(kind)
            if p and t:
                out.append(LabelClass(tuple(p), tuple(t)))
    return DomainStore(tuple(out))


def exclude_vertex(store: DomainStore, v: int) -> DomainStore:
    """Store with ``v`` removed from the pattern side (no match for ``v``)."""
    out = []
    found = False
    for c in store.classes:
        if v in c.pattern_vertices:
            found = True
            rest = tuple(x for x in c.pattern_vertices if x != v)
            if rest:
                out.append(LabelClass(rest, c.target_vertices))
        else:
            out.append(c)
    if not found:
        raise UsageError(f"pattern vertex {v} is not in any class")
    return DomainStore(tuple(out))


def bound(store: DomainStore) -> int:
    return sum(c.capacity for c in store.classes)


def select_class(store: DomainStore) -> LabelClass | None:
    """Class with the smallest larger side; ties by smaller product, then position."""
    best = None
    best_key = None
    for c in store.classes:
        np_, nt = len(c.pattern_vertices), len(c.target_vertices)
        key = (max(np_, nt), np_ * nt)
        if best_key is None or key < best_key:
            best, best_key = c, key
    return best
