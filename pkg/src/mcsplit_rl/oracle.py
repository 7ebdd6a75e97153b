"""Exhaustive maximum common induced subgraph search for small graphs.

Deliberately naive and independent of the label-class machinery: it walks
pattern vertices in index order, tries every compatible unused target and the
"leave unmatched" option, and only prunes with the number of pattern
vertices left to decide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import Graph, verify_common_subgraph

DEFAULT_CAP = 10


class OracleRefused(ValueError):
    """Instance is larger than the oracle's vertex cap."""


@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: tuple[tuple[int, int], ...]


def brute_force_mcs(
    gp: Graph,
    gt: Graph,
    limit: int = DEFAULT_CAP,
    fixed: tuple[tuple[int, int], ...] = (),
    allowed: Mapping[int, frozenset[int]] | None = None,
) -> OracleResult:
    """Maximum common induced subgraph by enumeration.

    ``fixed`` seeds the mapping with matches that must be kept; ``allowed``
    restricts each undecided pattern vertex to a set of targets (vertices
    missing from it may not be matched). Together they give the best
    completion of a partial solution.
    """
    if min(gp.n, gt.n) > limit:
        raise OracleRefused(
            f"min(|V_p|, |V_t|) = {min(gp.n, gt.n)} exceeds oracle cap {limit}"
        )
    mapping = list(fixed)
    used = {w for _, w in fixed}
    decided = {v for v, _ in fixed}
    order = [v for v in range(gp.n) if v not in decided]
    best = list(mapping)

    def compatible(v: int, w: int) -> bool:
        if gp.labels[v] != gt.labels[w]:
            return False
        if allowed is not None and w not in allowed.get(v, ()):
            return False
        return all(gp.adjacency_kind(v, v2) == gt.adjacency_kind(w, w2) for v2, w2 in mapping)

    def visit(i: int) -> None:
        nonlocal best
        if len(mapping) > len(best):
            best = list(mapping)
        if i == len(order) or len(mapping) + len(order) - i <= len(best):
            return
        v = order[i]
        for w in range(gt.n):
            if w not in used and compatible(v, w):
                mapping.append((v, w))
                used.add(w)
                visit(i + 1)
                used.discard(w)
                mapping.pop()
        visit(i + 1)

    visit(0)
    witness = tuple(sorted(best))
    assert verify_common_subgraph(gp, gt, witness)
    return OracleResult(len(witness), witness)
