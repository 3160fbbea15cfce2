import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mpxrank import (
    EmptyCommonSet,
    Layer,
    Method,
    MultiplexNetwork,
    NodeNotInTable,
    RankingTable,
    beta_sweep,
    classify,
    delta_agg,
    delta_norm,
    rank_nodes,
    sensitivity_report,
)

from oracles import ascending_positions, deltas, random_edges, straight_line_sweep


def test_rank_nodes_examples():
    assert rank_nodes([0.1, 0.9, 0.5]).tolist() == [1, 3, 2]
    assert rank_nodes([0.4, 0.4, 0.4]).tolist() == [1, 1, 1]
    assert rank_nodes([0.2, 0.7, 0.2, 0.9]).tolist() == [1, 3, 1, 4]


def test_rank_nodes_tolerates_rounding():
    a = 0.1 + 0.2
    assert a != 0.3
    assert rank_nodes([a, 0.3, 0.0]).tolist() == [2, 2, 1]


@pytest.mark.parametrize("seed", range(10))
def test_rank_nodes_sort_oracle(seed):
    rng = random.Random(seed)
    scores = [rng.choice([0.0, 0.25, 0.5, rng.random()]) for _ in range(9)]
    assert rank_nodes(scores).tolist() == ascending_positions(scores)


def table_from(positions, methods=(Method.M1, Method.M2), betas=(-1.0, 0.0, 1.0)):
    positions = np.asarray(positions, dtype=np.int64)
    nodes = tuple(f"n{i}" for i in range(positions.shape[0]))
    return RankingTable(nodes, tuple(methods), tuple(betas), positions, positions.astype(float))


def test_identical_layers_rank_identically_for_all_betas():
    a = Layer.from_edges("a", [("h", "x"), ("h", "y"), ("h", "z"), ("x", "y")])
    b = Layer.from_edges("b", a.edges)
    table = beta_sweep(MultiplexNetwork((a, b)), betas=(-20, -3, 0, 3, 20))
    for m in range(len(table.methods)):
        first = table.positions[:, m, 0]
        for k in range(len(table.betas)):
            assert (table.positions[:, m, k] == first).all()
    assert all(delta_agg(table, v) == 0 for v in table.node_order)


def test_sweep_needs_two_common_nodes():
    a = Layer.from_edges("a", [("p", "q")])
    b = Layer.from_edges("b", [("p", "r")])
    with pytest.raises(EmptyCommonSet):
        beta_sweep(MultiplexNetwork((a, b)))


def random_multiplex(rng, n_common=8, n_layers=3):
    common = [f"c{i}" for i in range(n_common)]
    raw = []
    for j in range(n_layers):
        nodes = common + [f"x{j}_{k}" for k in range(rng.randint(0, 5))]
        directed = rng.random() < 0.5
        raw.append((nodes, random_edges(rng, nodes, rng.uniform(0.15, 0.5), directed), directed))
    net = MultiplexNetwork(tuple(
        Layer.from_edges(f"L{j}", edges, directed, nodes=nodes) for j, (nodes, edges, directed) in enumerate(raw)
    ))
    return net, raw


@pytest.mark.parametrize("seed", range(8))
def test_sweep_matches_compositional_oracle(seed):
    rng = random.Random(seed)
    net, raw = random_multiplex(rng)
    betas = [-20.0, -5.0, -1.0, 0.0, 0.5, 3.0, 20.0]
    table = beta_sweep(net, betas=betas)
    common, positions = straight_line_sweep(raw, betas)
    assert sorted(table.node_order) == common
    for v in common:
        for m in (1, 2, 3, 4):
            for b in betas:
                assert table.position(v, m, b) == positions[v][(m, b)]
        assert (delta_agg(table, v), delta_norm(table, v)) == deltas(positions[v], (1, 2, 3, 4), betas)


def test_deltas_by_definition():
    # node 0 spreads over betas within M2; node 1 spreads across methods
    positions = [
        [[1, 1, 1], [1, 2, 4]],
        [[3, 3, 3], [1, 1, 1]],
        [[2, 2, 2], [2, 2, 2]],
    ]
    table = table_from(positions)
    assert delta_agg(table, "n0") == 3 and delta_norm(table, "n0") == 3
    assert delta_agg(table, "n1") == 0 and delta_norm(table, "n1") == 2
    assert delta_agg(table, "n2") == 0 and delta_norm(table, "n2") == 0


def test_single_method_has_zero_delta_norm():
    table = table_from([[[1, 2, 3]], [[3, 2, 1]]], methods=(Method.M4,))
    assert delta_norm(table, "n0") == 0
    assert delta_agg(table, "n0") == 2


def test_unknown_node_in_table():
    with pytest.raises(NodeNotInTable):
        delta_agg(table_from([[[1, 1, 1], [1, 1, 1]]]), "zz")


@pytest.mark.parametrize("d_agg,d_norm,tau,expected", [
    (0, 0, (0, 0), "A0N0"),
    (10, 3, (2, 2), "A+N+"),
    (1, 0, (2, 2), "A0N0"),
    (5, 1, (2, 2), "A+N0"),
    (0, 9, (2, 2), "A0N+"),
    (3, 3, (3, 3), "A0N0"),
])
def test_classify(d_agg, d_norm, tau, expected):
    assert classify(d_agg, d_norm, *tau) == expected


def test_report_constant_table_all_robust():
    table = table_from([[[1, 1, 1], [1, 1, 1]], [[2, 2, 2], [2, 2, 2]]])
    records = sensitivity_report(table)
    assert {r.quadrant for r in records} == {"A0N0"}
    assert [r.node for r in records] == ["n0", "n1"]


def test_report_sorted_by_total_sensitivity():
    table = table_from([
        [[1, 1, 1], [1, 1, 1]],
        [[1, 2, 3], [3, 3, 3]],
        [[3, 3, 3], [2, 2, 2]],
    ])
    assert [r.node for r in sensitivity_report(table)] == ["n1", "n2", "n0"]


def test_curve_and_restrict(two_triangles):
    table = beta_sweep(two_triangles, betas=(-1, 0, 1))
    assert table.curve("a", 1) == [(-1.0, 1), (0.0, 1), (1.0, 1)]
    sub = table.restrict(methods=[2], betas=[0])
    assert sub.positions.shape == (3, 1, 1)


def _seeded_network(seed):
    return random_multiplex(random.Random(seed), n_common=7)[0]


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10_000), data=st.data())
def test_grid_subset_never_increases_deltas(seed, data):
    net = _seeded_network(seed)
    betas = [-20.0, -4.0, -1.0, 0.0, 1.0, 4.0, 20.0]
    table = beta_sweep(net, betas=betas)
    keep = data.draw(st.lists(st.sampled_from(betas), min_size=1, unique=True))
    methods = data.draw(st.lists(st.sampled_from(list(Method)), min_size=1, unique=True))
    sub = table.restrict(methods=methods, betas=keep)
    for v in table.node_order:
        assert delta_agg(sub, v) <= delta_agg(table, v)
        assert delta_norm(sub, v) <= delta_norm(table, v)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_single_point_grid_has_zero_deltas(seed):
    table = beta_sweep(_seeded_network(seed), methods=[Method.M2], betas=[0.0])
    assert all(delta_agg(table, v) == delta_norm(table, v) == 0 for v in table.node_order)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_relabeling_invariance(seed):
    rng = random.Random(seed)
    net, raw = random_multiplex(rng, n_common=6)
    mapping = {}
    for nodes, _, _ in raw:
        for v in nodes:
            mapping.setdefault(v, f"z{rng.random():.12f}")
    renamed = MultiplexNetwork(tuple(
        Layer.from_edges(f"L{j}", [(mapping[u], mapping[v]) for u, v in edges], directed,
                         nodes=[mapping[v] for v in nodes])
        for j, (nodes, edges, directed) in enumerate(raw)
    ))
    betas = (-10.0, 0.0, 10.0)
    a, b = beta_sweep(net, betas=betas), beta_sweep(renamed, betas=betas)
    for v in a.node_order:
        assert delta_agg(a, v) == delta_agg(b, mapping[v])
        assert delta_norm(a, v) == delta_norm(b, mapping[v])


@settings(max_examples=100, deadline=None)
@given(scores=st.lists(st.integers(0, 1000).map(lambda i: i / 1000), min_size=2, max_size=12))
def test_rank_invariant_under_increasing_transform(scores):
    base = rank_nodes(scores)
    assert (rank_nodes([3.0 * s + 0.5 for s in scores]) == base).all()
    assert (rank_nodes(np.exp(scores)) == base).all()
    assert (rank_nodes([s ** 3 for s in scores]) == base).all()


@settings(max_examples=100, deadline=None)
@given(scores=st.lists(st.floats(0, 1), min_size=1, max_size=20, unique=True))
def test_positions_sum_without_ties(scores):
    k = len(scores)
    ordered = sorted(scores)
    if all(b - a > 1e-12 for a, b in zip(ordered, ordered[1:])):
        assert sorted(rank_nodes(scores).tolist()) == list(range(1, k + 1))
        assert rank_nodes(scores).sum() == k * (k + 1) // 2


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_positions_within_bounds(seed):
    table = beta_sweep(_seeded_network(seed), betas=(-20, 0, 20))
    k = len(table)
    assert table.positions.min() >= 1 and table.positions.max() <= k
    for r in sensitivity_report(table):
        assert 0 <= r.delta_agg <= k - 1 and 0 <= r.delta_norm <= k - 1
    # the best score sits above every node not tied with it
    best = np.argmax(table.scores, axis=0)
    top = np.take_along_axis(table.positions, best[None], axis=0)[0]
    below = (table.scores < table.scores.max(axis=0) - 1e-12).sum(axis=0)
    assert (top == below + 1).all()
    assert (top[below == k - 1] == k).all()
