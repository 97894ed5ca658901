import random

import pytest

from helpers import complete_bipartite, complete_graph, cycle_graph, path_graph, random_graph
from rwlab.gd_builder import build_gd
from rwlab.graph_core import Graph, induced_subgraph
from rwlab.rankdec import (
    RankDecomposition,
    balanced_edge,
    caterpillar_decomposition,
    caterpillar_from_order,
    decomposition_width,
    edge_partition,
    exact_rankwidth,
    leaf_labeled_cubic_trees,
    parse_decomposition,
    random_decomposition,
    serialize_decomposition,
)


def star_decomposition():
    # three leaves around one internal node
    return RankDecomposition([(0, 3), (1, 3), (2, 3)], {0: 0, 1: 1, 2: 2})


def quartet():
    # the unique shape on four leaves: two internal nodes, central edge (4, 5)
    return RankDecomposition(
        [(0, 4), (1, 4), (4, 5), (2, 5), (3, 5)], {0: 0, 1: 1, 2: 2, 3: 3}
    )


def test_validation_rejects_bad_trees():
    with pytest.raises(ValueError):  # degree-2 internal node
        RankDecomposition([(0, 2), (2, 1)], {0: 0, 1: 1})
    with pytest.raises(ValueError):  # not a tree (cycle)
        RankDecomposition([(0, 1), (1, 2), (2, 0)], {0: 0})
    with pytest.raises(ValueError):  # disconnected
        RankDecomposition([(0, 1), (2, 3)], {0: 0, 1: 1, 2: 2, 3: 3})
    with pytest.raises(ValueError):  # leaf_map misses a leaf
        RankDecomposition([(0, 3), (1, 3), (2, 3)], {0: 0, 1: 1})
    with pytest.raises(ValueError):  # leaf_map hits an internal node
        RankDecomposition([(0, 3), (1, 3), (2, 3)], {0: 0, 1: 1, 2: 3})
    with pytest.raises(ValueError):
        RankDecomposition([], {})
    with pytest.raises(ValueError):
        RankDecomposition([(0, 0)], {0: 0})


def test_two_vertex_graph_single_edge_tree():
    dec = RankDecomposition([(0, 1)], {0: 0, 1: 1})
    assert decomposition_width(Graph(2, [(0, 1)]), dec).width == 1
    assert decomposition_width(Graph(2), dec).width == 0


def test_edge_partition_cases():
    dec = quartet()
    assert edge_partition(dec, (0, 4)) == (frozenset({0}), frozenset({1, 2, 3}))
    a, b = edge_partition(dec, (4, 5))
    assert a == frozenset({0, 1}) and b == frozenset({2, 3})
    # endpoint order is respected
    b2, a2 = edge_partition(dec, (5, 4))
    assert (a2, b2) == (a, b)
    with pytest.raises(ValueError):
        edge_partition(dec, (0, 5))


def test_caterpillar_g2_center_cut(gd):
    art = gd(2)
    dec = caterpillar_decomposition(art)
    count = art.graph.n
    # the first spine edge separates the two centers from the whole path
    sa, sb = edge_partition(dec, (count, count + 1))
    assert sa == frozenset(art.centers)
    assert sb == frozenset(art.path_vertices)


def test_width_edgeless_and_complete():
    for n in (2, 4, 6):
        dec = caterpillar_from_order(range(n))
        assert decomposition_width(Graph(n), dec).width == 0
        assert decomposition_width(complete_graph(n), dec).width == 1


def test_width_report_shape():
    g = cycle_graph(5)
    dec = caterpillar_from_order(range(5))
    report = decomposition_width(g, dec)
    assert len(report.per_edge) == 2 * 5 - 3
    assert report.width == max(report.per_edge.values())
    d = report.as_dict()
    assert d["schema"] == 1 and d["width"] == report.width


def test_width_rejects_mismatched_vertices():
    dec = caterpillar_from_order(range(4))
    with pytest.raises(ValueError):
        decomposition_width(cycle_graph(5), dec)


@pytest.mark.parametrize("d", (1, 2, 3, 4))
def test_caterpillar_width_bound(gd, d):
    art = gd(d)
    report = decomposition_width(art.graph, caterpillar_decomposition(art))
    assert report.width <= d + 1


def test_caterpillar_neighbor_union_bound(gd):
    # on big cuts with all centers on one side, the far side touches at most
    # d+1 vertices of the near side (the centers plus one path boundary), so
    # the cut matrix has at most d+1 live columns; that is the width argument
    art = gd(4)
    d = art.d
    g = art.graph
    dec = caterpillar_decomposition(art)
    center_set = frozenset(art.centers)
    checked = 0
    for e in dec.edges():
        sx, sy = edge_partition(dec, e)
        if len(sx) <= d or len(sy) <= d:
            continue
        if not center_set <= sx:
            sx, sy = sy, sx
        if not center_set <= sx:
            continue
        touched = set()
        for v in sy:
            touched |= g.neighbors(v) & sx
        assert len(touched) <= d + 1
        checked += 1
    assert checked > 0


def test_balanced_edge_two_and_four_leaves():
    dec2 = RankDecomposition([(0, 1)], {0: 0, 1: 1})
    assert balanced_edge(dec2) == (0, 1)
    assert balanced_edge(quartet()) == (4, 5)


def test_balanced_edge_long_caterpillar():
    dec = caterpillar_from_order(range(100))
    e = balanced_edge(dec)
    sa, sb = edge_partition(dec, e)
    assert min(len(sa), len(sb)) >= 34
    assert balanced_edge(dec) == e  # deterministic


def test_exact_rankwidth_complete_graphs():
    for n in range(2, 8):
        value, dec = exact_rankwidth(complete_graph(n))
        assert value == 1
        assert decomposition_width(complete_graph(n), dec).width == 1


def test_exact_rankwidth_trivial_sizes():
    assert exact_rankwidth(Graph(0)) == (0, None)
    assert exact_rankwidth(Graph(1)) == (0, None)
    value, dec = exact_rankwidth(Graph(2, [(0, 1)]))
    assert value == 1 and dec is not None


def test_exact_rankwidth_respects_limit():
    with pytest.raises(ValueError):
        exact_rankwidth(complete_graph(9), limit=8)


def test_exact_rankwidth_c5_against_tree_enumeration():
    g = cycle_graph(5)
    value, dec = exact_rankwidth(g)
    widths = [decomposition_width(g, t).width for t in leaf_labeled_cubic_trees(range(5))]
    assert len(widths) == 15
    assert value == min(widths) == 2
    assert decomposition_width(g, dec).width == 2


def test_exact_rankwidth_g1_golden(gd):
    art = gd(1)
    value, dec = exact_rankwidth(art.graph)
    assert value == 2
    assert decomposition_width(art.graph, dec).width == 2


def test_exact_rankwidth_matches_enumeration_n4_n5():
    rng = random.Random(808)
    trees4 = list(leaf_labeled_cubic_trees(range(4)))
    for mask in range(64):
        pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
        g = Graph(4, [pairs[i] for i in range(6) if (mask >> i) & 1])
        value, dec = exact_rankwidth(g)
        assert value == min(decomposition_width(g, t).width for t in trees4)
        assert decomposition_width(g, dec).width == value
    trees5 = list(leaf_labeled_cubic_trees(range(5)))
    for _ in range(40):
        g = random_graph(rng, 5, rng.choice((0.3, 0.5, 0.7)))
        value, dec = exact_rankwidth(g)
        assert value == min(decomposition_width(g, t).width for t in trees5)


def test_exact_rankwidth_distance_hereditary_families():
    for n in range(2, 8):
        assert exact_rankwidth(path_graph(n))[0] == 1
    for a in range(1, 4):
        for b in range(a, 5):
            assert exact_rankwidth(complete_bipartite(a, b))[0] == 1


def test_rankwidth_monotone_under_induced_subgraphs():
    rng = random.Random(1234)
    for _ in range(40):
        n = rng.randrange(2, 8)
        g = random_graph(rng, n, 0.5)
        keep = [v for v in range(n) if rng.random() < 0.7]
        sub = induced_subgraph(g, keep)
        if sub.n == 0:
            continue
        assert exact_rankwidth(sub)[0] <= exact_rankwidth(g)[0]


def test_cubic_tree_counts():
    for n, expect in ((2, 1), (3, 1), (4, 3), (5, 15), (6, 105), (7, 945)):
        assert sum(1 for _ in leaf_labeled_cubic_trees(range(n))) == expect
    with pytest.raises(ValueError):
        next(leaf_labeled_cubic_trees([0]))


def test_random_decomposition_is_valid():
    rng = random.Random(99)
    for n in (2, 3, 8, 20):
        dec = random_decomposition(range(n), rng)
        assert sorted(dec.vertices()) == list(range(n))
        assert len(dec.leaves()) == n


def test_serialize_parse_roundtrip():
    rng = random.Random(4)
    for dec in (quartet(), star_decomposition(), random_decomposition(range(9), rng)):
        text = serialize_decomposition(dec)
        back = parse_decomposition(text)
        assert serialize_decomposition(back) == text
        assert back.leaf_map == dec.leaf_map
        assert back.edges() == dec.edges()


def test_parse_decomposition_rejects_garbage():
    with pytest.raises(ValueError):
        parse_decomposition("node 0 leaf 0\nnode 1 leaf 1\nedge 0 1\nwhat 3\n")
    with pytest.raises(ValueError):
        parse_decomposition("node 0 leaf 0\nnode 1 leaf 1\nnode 9 internal\nedge 0 1\n")


def test_caterpillar_matches_leaf_order(gd):
    art = gd(1)
    dec = caterpillar_decomposition(art)
    order = list(art.centers) + list(art.path_vertices)
    assert [dec.leaf_map[v] for v in order] == list(range(len(order)))
