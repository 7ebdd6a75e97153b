"""Vertex-labelled graphs and feasibility checking of common-subgraph mappings."""

from __future__ import annotations

import enum
import logging
from typing import Iterable, Sequence

log = logging.getLogger(__name__)


class UsageError(ValueError):
    """Raised when an operation is called outside its preconditions."""


class AdjacencyKind(enum.IntEnum):
    """Relation between an ordered vertex pair ``(u, v)``."""

    NONE = 0
    OUT = 1  # u -> v only
    IN = 2  # v -> u only
    BOTH = 3

    def reverse(self) -> AdjacencyKind:
        if self is AdjacencyKind.OUT:
            return AdjacencyKind.IN
        if self is AdjacencyKind.IN:
            return AdjacencyKind.OUT
        return self


class Graph:
    """Immutable graph over vertices ``0..n-1``.

    ``edges`` are ordered pairs when ``directed`` is true and unordered pairs
    otherwise; repeated edges are merged. Labels default to all zero, which is
    how an unlabelled graph is represented.
    """

    __slots__ = ("n", "labels", "directed", "_rows", "_degrees")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[int] | None = None,
        directed: bool = False,
    ):
        if n < 0:
            raise UsageError(f"negative vertex count {n}")
        if labels is None:
            labels = (0,) * n
        labels = tuple(int(x) for x in labels)
        if len(labels) != n:
            raise UsageError(f"expected {n} labels, got {len(labels)}")
        if any(x < 0 for x in labels):
            raise UsageError("labels must be non-negative integers")

        rows = [bytearray(n) for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise UsageError(f"self-loop on vertex {u}")
            if directed:
                rows[u][v] |= AdjacencyKind.OUT
                rows[v][u] |= AdjacencyKind.IN
            else:
                rows[u][v] = rows[v][u] = AdjacencyKind.BOTH

        self.n = n
        self.labels = labels
        self.directed = directed
        self._rows = tuple(bytes(r) for r in rows)
        self._degrees = tuple(n - r.count(0) for r in rows)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise UsageError(f"vertex {v} out of range for n={self.n}")

    def adjacency_kind(self, u: int, v: int) -> AdjacencyKind:
        self._check(u)
        self._check(v)
        return AdjacencyKind(self._rows[u][v])

    def row(self, v: int) -> bytes:
        """Adjacency kinds from ``v`` to every vertex, as raw byte values."""
        return self._rows[v]

    def degree(self, v: int) -> int:
        """Number of distinct neighbours of ``v``, in either direction."""
        self._check(v)
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def edges(self) -> list[tuple[int, int]]:
        """Out-edges ``(u, v)`` for directed graphs, ``u < v`` pairs otherwise."""
        out = []
        for u, r in enumerate(self._rows):
            for v, k in enumerate(r):
                if self.directed:
                    if k & AdjacencyKind.OUT:
                        out.append((u, v))
                elif k and u < v:
                    out.append((u, v))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.directed == other.directed
            and self.labels == other.labels
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.directed, self.labels, self._rows))

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, {kind}, edges={len(self.edges())})"


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def adjacency_kind(g: Graph, u: int, v: int) -> AdjacencyKind:
    return g.adjacency_kind(u, v)


def common_subgraph_violation(
    gp: Graph, gt: Graph, matches: Iterable[tuple[int, int]]
) -> str | None:
    """Return why ``matches`` is not a common induced subgraph, or None if it is."""
    matches = list(matches)
    for v, w in matches:
        if not (0 <= v < gp.n and 0 <= w < gt.n):
            return f"match ({v}, {w}) out of range"
    if len({v for v, _ in matches}) != len(matches):
        return "pattern vertex matched twice"
    if len({w for _, w in matches}) != len(matches):
        return "target vertex matched twice"
    for v, w in matches:
        if gp.labels[v] != gt.labels[w]:
            return f"label mismatch on ({v}, {w})"
    for i, (v, w) in enumerate(matches):
        prow, trow = gp.row(v), gt.row(w)
        for v2, w2 in matches[i + 1 :]:
            if prow[v2] != trow[w2]:
                return f"adjacency differs between ({v}, {w}) and ({v2}, {w2})"
    return None


def verify_common_subgraph(
    gp: Graph, gt: Graph, matches: Iterable[tuple[int, int]]
) -> bool:
    reason = common_subgraph_violation(gp, gt, matches)
    if reason is not None:
        log.debug("infeasible mapping: %s", reason)
        return False
    return True
