import math
import random

import pytest
from hypothesis import given, settings

from mcsplit_rl import Graph, UsageError, verify_common_subgraph
from mcsplit_rl.oracle import brute_force_mcs
from mcsplit_rl.search import (
    DepthLimitError,
    SolveConfig,
    Status,
    branching_sd,
    run,
    solve,
    solve_top_down,
)

from conftest import graph_pairs, path3, random_graph, triangle

CONFIGS = ["degree", "rl", "degree-td", "rl-td"]


@pytest.mark.parametrize("name", CONFIGS)
def test_small_examples(name):
    cfg = SolveConfig.from_name(name)
    r = run(triangle(), triangle(), cfg)
    assert r.size == 3 and r.optimum_proved and r.status is Status.SOLVED
    # brute force gives 2: an induced P3 needs a non-adjacent pair, K3 has none
    assert brute_force_mcs(path3(), triangle()).size == 2
    r = run(path3(), triangle(), cfg)
    assert r.size == 2 and verify_common_subgraph(path3(), triangle(), r.best)
    r = run(Graph(1, labels=[5]), Graph(2), cfg)
    assert r.size == 0 and r.optimum_proved


def test_config_names():
    assert [SolveConfig.from_name(n).name for n in CONFIGS] == CONFIGS
    with pytest.raises(UsageError):
        SolveConfig.from_name("greedy")
    with pytest.raises(UsageError):
        SolveConfig.from_name("rl-bu")
    with pytest.raises(UsageError):
        SolveConfig(timeout=0)


def test_driver_config_mismatch():
    with pytest.raises(UsageError):
        solve(path3(), path3(), SolveConfig.from_name("rl-td"))
    with pytest.raises(UsageError):
        solve_top_down(path3(), path3(), SolveConfig.from_name("rl"))


def test_top_down_identity_first_iteration(rng):
    g = random_graph(rng, 9, 0.4)
    r = solve_top_down(g, g, SolveConfig.from_name("rl-td"))
    assert r.size == 9 and r.stats.iterations == 1


def test_top_down_descends_to_zero():
    r = solve_top_down(Graph(3, labels=[1, 1, 1]), Graph(2, labels=[2, 2]), SolveConfig.from_name("degree-td"))
    assert r.size == 0 and r.optimum_proved and r.stats.iterations == 2


def test_empty_graphs():
    for name in CONFIGS:
        r = run(Graph(0), Graph(3), SolveConfig.from_name(name))
        assert r.size == 0 and r.stats.time_opt == 0.0
        assert r.stats.v_sd == 0.0


def test_more_pattern_than_target_vertices(rng):
    gp, gt = random_graph(rng, 8, 0.5), random_graph(rng, 4, 0.5)
    expected = brute_force_mcs(gp, gt).size
    for name in CONFIGS:
        assert run(gp, gt, SolveConfig.from_name(name)).size == expected


def test_branching_sd_examples():
    assert branching_sd([2, 2, 2]) == 0
    assert branching_sd([0, 4]) == 2
    # mean 2.5, squared deviations 2.25 + 0.25 + 0.25 + 2.25 = 5, /4
    assert branching_sd([1, 2, 3, 4]) == pytest.approx(math.sqrt(1.25), abs=1e-12)
    with pytest.raises(UsageError):
        branching_sd([])


def test_branch_counts_match_tried_matches(rng):
    gp, gt = random_graph(rng, 7, 0.5), random_graph(rng, 7, 0.3)
    r = solve(gp, gt, SolveConfig.from_name("rl"))
    assert sum(r.stats.b_p) == sum(r.stats.b_t)
    assert sum(r.stats.b_p) < r.stats.recursive_calls
    assert len(r.stats.b_p) == gp.n and len(r.stats.b_t) == gt.n


def _hard_pair():
    rng = random.Random(7)
    return random_graph(rng, 40, 0.5), random_graph(rng, 40, 0.5)


@pytest.mark.parametrize("name", CONFIGS)
def test_node_limit_gives_feasible_timeout(name):
    gp, gt = _hard_pair()
    r = run(gp, gt, SolveConfig.from_name(name, node_limit=300))
    assert r.status is Status.TIMEOUT and not r.optimum_proved
    assert verify_common_subgraph(gp, gt, r.best)
    assert r.stats.time_opt <= r.stats.time_total
    if r.stats.incumbent_log:
        assert r.size == r.stats.incumbent_log[-1][0]


def test_wall_clock_timeout():
    gp, gt = _hard_pair()
    r = run(gp, gt, SolveConfig.from_name("degree", timeout=0.05))
    assert r.status is Status.TIMEOUT
    assert r.stats.time_total < 5
    assert verify_common_subgraph(gp, gt, r.best)


def test_depth_cap_raises():
    g = Graph(30)
    with pytest.raises(DepthLimitError):
        solve(g, Graph(30, [(0, 1)]), SolveConfig(max_depth=5))


def test_deterministic_stats(rng):
    gp, gt = random_graph(rng, 8, 0.5), random_graph(rng, 8, 0.5)
    for name in CONFIGS:
        a = run(gp, gt, SolveConfig.from_name(name))
        b = run(gp, gt, SolveConfig.from_name(name))
        assert a.best == b.best
        assert a.stats.without_times() == b.stats.without_times()


def test_degree_policy_never_builds_scores(monkeypatch, rng):
    import mcsplit_rl.search as search_mod

    def boom(*a, **k):
        raise AssertionError("score table touched under the degree policy")

    gp, gt = random_graph(rng, 7, 0.5), random_graph(rng, 7, 0.5)
    before = solve(gp, gt, SolveConfig.from_name("degree"))
    monkeypatch.setattr(search_mod, "update_scores", boom)
    monkeypatch.setattr(search_mod.ScoreTable, "zeros", boom)
    after = solve(gp, gt, SolveConfig.from_name("degree"))
    assert before.best == after.best
    assert before.stats.without_times() == after.stats.without_times()


@settings(max_examples=60, deadline=None)
@given(graph_pairs(max_n=6))
def test_matches_oracle_and_policies_agree(pair):
    gp, gt = pair
    expected = brute_force_mcs(gp, gt).size
    for name in CONFIGS:
        r = run(gp, gt, SolveConfig.from_name(name, check_invariants=True))
        assert r.size == expected
        assert verify_common_subgraph(gp, gt, r.best)
        sizes = [s for s, _ in r.stats.incumbent_log]
        assert sizes == sorted(sizes)


@settings(max_examples=60, deadline=None)
@given(graph_pairs(max_n=5))
def test_pruning_soundness(pair):
    gp, gt = pair
    for name in CONFIGS:
        pruned = run(gp, gt, SolveConfig.from_name(name))
        exhaustive = run(gp, gt, SolveConfig.from_name(name, prune=False))
        assert pruned.size == exhaustive.size


@settings(max_examples=40, deadline=None)
@given(graph_pairs(max_n=5))
def test_upper_bound_valid_at_every_node(pair):
    gp, gt = pair
    seen = []
    cfg = SolveConfig.from_name("rl", node_hook=lambda cur, store, ub: seen.append((cur, store, ub)))
    solve(gp, gt, cfg)
    for cur, store, ub in seen:
        allowed = {v: store.candidates(v) for v in range(gp.n)}
        best = brute_force_mcs(gp, gt, fixed=cur, allowed=allowed).size
        assert ub >= best
