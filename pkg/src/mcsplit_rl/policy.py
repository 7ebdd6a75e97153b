"""Branching policies: degree ordering and accumulated bound-decrease rewards."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .domains import LabelClass
from .graph import Graph

DEFAULT_SCORE_CAP = 10**9


class PolicyKind(enum.Enum):
    DEGREE = "degree"
    REWARD_LEARNING = "rl"


class InvariantViolation(AssertionError):
    """An internal search invariant failed; indicates a bug, not bad input."""


@dataclass
class ScoreTable:
    """Per-vertex accumulated rewards for the pattern (``s_p``) and target (``s_t``)."""

    s_p: list[int]
    s_t: list[int]
    cap: int = DEFAULT_SCORE_CAP
    rescales: int = field(default=0, compare=False)

    @classmethod
    def zeros(cls, n_pattern: int, n_target: int, cap: int = DEFAULT_SCORE_CAP) -> ScoreTable:
        return cls([0] * n_pattern, [0] * n_target, cap)


def reward(bound_before: int, bound_after: int) -> int:
    r = bound_before - bound_after
    if r < 0:
        raise InvariantViolation(
            f"negative reward: bound rose from {bound_before} to {bound_after}"
        )
    return r


def maybe_rescale(scores: ScoreTable) -> None:
    """Halve every score when any exceeds the cap."""
    if max(scores.s_p, default=0) > scores.cap or max(scores.s_t, default=0) > scores.cap:
        scores.s_p[:] = [s // 2 for s in scores.s_p]
        scores.s_t[:] = [s // 2 for s in scores.s_t]
        scores.rescales += 1


def update_scores(scores: ScoreTable, v: int, w: int, r: int) -> None:
    if r:
        scores.s_p[v] += r
        scores.s_t[w] += r
        maybe_rescale(scores)


def select_pattern_vertex(
    cls: LabelClass, policy: PolicyKind, scores: ScoreTable | None, gp: Graph
) -> int:
    deg = gp.degrees
    if policy is PolicyKind.DEGREE:
        return min(cls.pattern_vertices, key=lambda v: (-deg[v], v))
    s = scores.s_p
    return min(cls.pattern_vertices, key=lambda v: (-s[v], -deg[v], v))


def order_target_vertices(
    cls: LabelClass, policy: PolicyKind, scores: ScoreTable | None, gt: Graph
) -> list[int]:
    deg = gt.degrees
    if policy is PolicyKind.DEGREE:
        return sorted(cls.target_vertices, key=lambda w: (-deg[w], w))
    s = scores.s_t
    return sorted(cls.target_vertices, key=lambda w: (-s[w], -deg[w], w))
