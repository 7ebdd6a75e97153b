"""Branch-and-bound search for the maximum common induced subgraph.

``solve`` runs the bottom-up search, improving an incumbent until the bound
proves it optimal. ``solve_top_down`` instead asks for a solution of size
``k`` for decreasing ``k`` and stops at the first one it finds.
"""

from __future__ import annotations

import enum
import statistics
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import domains
from .domains import DomainStore
from .graph import Graph, UsageError
from .policy import (
    DEFAULT_SCORE_CAP,
    InvariantViolation,
    PolicyKind,
    ScoreTable,
    order_target_vertices,
    reward,
    select_pattern_vertex,
    update_scores,
)

Solution = tuple[tuple[int, int], ...]
NodeHook = Callable[[Solution, DomainStore, int], None]

DEFAULT_TIMEOUT = 1800.0
DEFAULT_MAX_DEPTH = 20000


class Status(enum.Enum):
    SOLVED = "solved"
    TIMEOUT = "timeout"


class DepthLimitError(RuntimeError):
    """The search needed more recursion levels than the configured cap."""


@dataclass(frozen=True)
class SolveConfig:
    policy: PolicyKind = PolicyKind.DEGREE
    top_down: bool = False
    timeout: float = DEFAULT_TIMEOUT
    node_limit: int | None = None
    score_cap: int = DEFAULT_SCORE_CAP
    max_depth: int = DEFAULT_MAX_DEPTH
    # Test hooks: disable bound pruning, check UB/reward invariants at every
    # node, observe every node as (partial solution, store, UB).
    prune: bool = True
    check_invariants: bool = False
    node_hook: NodeHook | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.timeout > 0:
            raise UsageError(f"timeout must be positive, got {self.timeout}")

    @property
    def name(self) -> str:
        return self.policy.value + ("-td" if self.top_down else "")

    @classmethod
    def from_name(cls, name: str, **kwargs) -> SolveConfig:
        """Config for one of ``degree``, ``rl``, ``degree-td``, ``rl-td``."""
        base, _, suffix = name.partition("-")
        if suffix not in ("", "td"):
            raise UsageError(f"unknown solver config {name!r}")
        try:
            policy = PolicyKind(base)
        except ValueError:
            raise UsageError(f"unknown solver config {name!r}") from None
        return cls(policy=policy, top_down=suffix == "td", **kwargs)


@dataclass
class SearchStats:
    recursive_calls: int = 0
    time_total: float = 0.0
    time_opt: float = 0.0
    # recursive_calls at the moment the final incumbent was recorded
    calls_opt: int = 0
    b_p: list[int] = field(default_factory=list)
    b_t: list[int] = field(default_factory=list)
    # (size, elapsed seconds) for every incumbent improvement
    incumbent_log: list[tuple[int, float]] = field(default_factory=list)
    invariant_checks: int = 0
    # values of k attempted by the top-down driver; 0 for bottom-up
    iterations: int = 0

    @property
    def v_sd(self) -> float:
        return branching_sd(self.b_p) if self.b_p else 0.0

    @property
    def w_sd(self) -> float:
        return branching_sd(self.b_t) if self.b_t else 0.0

    def without_times(self) -> dict:
        return {
            "recursive_calls": self.recursive_calls,
            "calls_opt": self.calls_opt,
            "b_p": list(self.b_p),
            "b_t": list(self.b_t),
            "incumbent_sizes": [s for s, _ in self.incumbent_log],
            "iterations": self.iterations,
        }


@dataclass
class SolveResult:
    status: Status
    best: Solution
    optimum_proved: bool
    stats: SearchStats

    @property
    def size(self) -> int:
        return len(self.best)


def branching_sd(counts: Sequence[int]) -> float:
    """Population standard deviation of per-vertex branching counts."""
    if len(counts) == 0:
        raise UsageError("branching_sd needs at least one count")
    return statistics.pstdev(counts)


class _Stop(Exception):
    pass


class _Found(Exception):
    pass


class _Search:
    def __init__(self, gp: Graph, gt: Graph, config: SolveConfig):
        self.gp, self.gt, self.config = gp, gt, config
        self.learn = config.policy is PolicyKind.REWARD_LEARNING
        self.scores = ScoreTable.zeros(gp.n, gt.n, config.score_cap) if self.learn else None
        self.stats = SearchStats(b_p=[0] * gp.n, b_t=[0] * gt.n)
        self.best: Solution = ()
        self.cur: list[tuple[int, int]] = []
        self.k = 0
        self.start = time.monotonic()
        self.deadline = self.start + config.timeout

    def _enter(self, depth: int) -> None:
        self.stats.recursive_calls += 1
        if time.monotonic() > self.deadline:
            raise _Stop
        limit = self.config.node_limit
        if limit is not None and self.stats.recursive_calls > limit:
            raise _Stop
        if depth > self.config.max_depth:
            raise DepthLimitError(
                f"search depth {depth} exceeds cap {self.config.max_depth}"
            )

    def _record(self) -> None:
        self.best = tuple(self.cur)
        elapsed = time.monotonic() - self.start
        self.stats.time_opt = elapsed
        self.stats.calls_opt = self.stats.recursive_calls
        self.stats.incumbent_log.append((len(self.best), elapsed))

    def _branch(self, store: DomainStore, ub: int, depth: int) -> None:
        gp, gt, cfg = self.gp, self.gt, self.config
        cls = domains.select_class(store)
        v = select_pattern_vertex(cls, cfg.policy, self.scores, gp)
        before = ub - len(self.cur)
        for w in order_target_vertices(cls, cfg.policy, self.scores, gt):
            child = domains.split(store, gp, gt, v, w)
            after = domains.bound(child)
            r = reward(before, after)
            if cfg.check_invariants:
                self._check_child(ub, len(self.cur) + 1 + after)
            if self.learn:
                update_scores(self.scores, v, w, r)
            self.stats.b_p[v] += 1
            self.stats.b_t[w] += 1
            self.cur.append((v, w))
            self._node(child, depth + 1)
            self.cur.pop()
        child = domains.exclude_vertex(store, v)
        if cfg.check_invariants:
            self._check_child(ub, len(self.cur) + domains.bound(child))
        self._node(child, depth + 1)

    def _check_child(self, parent_ub: int, child_ub: int) -> None:
        self.stats.invariant_checks += 1
        if child_ub > parent_ub:
            raise InvariantViolation(f"child UB {child_ub} exceeds parent UB {parent_ub}")

    def _node(self, store: DomainStore, depth: int) -> None:
        raise NotImplementedError


class _BottomUp(_Search):
    def _node(self, store: DomainStore, depth: int) -> None:
        self._enter(depth)
        if not store:
            if len(self.cur) > len(self.best):
                self._record()
            return
        ub = len(self.cur) + domains.bound(store)
        if self.config.node_hook is not None:
            self.config.node_hook(tuple(self.cur), store, ub)
        if self.config.prune and ub <= len(self.best):
            return
        self._branch(store, ub, depth)


class _TopDown(_Search):
    def _node(self, store: DomainStore, depth: int) -> None:
        self._enter(depth)
        if len(self.cur) > len(self.best):
            self._record()
        if len(self.cur) >= self.k:
            raise _Found
        if not store:
            return
        ub = len(self.cur) + domains.bound(store)
        if self.config.node_hook is not None:
            self.config.node_hook(tuple(self.cur), store, ub)
        if self.config.prune and ub < self.k:
            return
        self._branch(store, ub, depth)


def _run(search: _Search, body: Callable[[], bool]) -> SolveResult:
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, search.config.max_depth + 200))
    try:
        proved = body()
        status = Status.SOLVED
    except _Stop:
        proved = False
        status = Status.TIMEOUT
    finally:
        sys.setrecursionlimit(old_limit)
    search.stats.time_total = time.monotonic() - search.start
    search.stats.time_opt = min(search.stats.time_opt, search.stats.time_total)
    return SolveResult(status, search.best, proved, search.stats)


def solve(gp: Graph, gt: Graph, config: SolveConfig | None = None) -> SolveResult:
    """Bottom-up branch and bound; the incumbent only grows until proved optimal."""
    config = config or SolveConfig()
    if config.top_down:
        raise UsageError("solve() needs a bottom-up config; use solve_top_down()")
    search = _BottomUp(gp, gt, config)

    def body() -> bool:
        search._node(domains.initial_classes(gp, gt), 0)
        return True

    return _run(search, body)


def solve_top_down(gp: Graph, gt: Graph, config: SolveConfig) -> SolveResult:
    """Decision searches for k = min(|V_p|, |V_t|), k-1, ...; first success is optimal.

    Scores carry over between values of k.
    """
    if not config.top_down:
        raise UsageError("solve_top_down() needs a config with top_down=True")
    search = _TopDown(gp, gt, config)
    initial = domains.initial_classes(gp, gt)

    def body() -> bool:
        for k in range(min(gp.n, gt.n), 0, -1):
            search.k = k
            search.stats.iterations += 1
            search.cur.clear()
            try:
                search._node(initial, 0)
            except _Found:
                return True
        return True

    return _run(search, body)


def run(gp: Graph, gt: Graph, config: SolveConfig) -> SolveResult:
    if config.top_down:
        return solve_top_down(gp, gt, config)
    return solve(gp, gt, config)
