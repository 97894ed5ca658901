"""End-to-end acceptance suite.

Each test covers one numbered criterion, enforces any stated time budget,
and prints a single PASS line on the way out (run pytest with -s to see
them).  Heavy artifacts (family members, caterpillar width reports) are
built once per session and shared.
"""

import random
import time
from itertools import combinations

import pytest

from helpers import complete_bipartite, complete_graph, path_graph, random_graph
from rwlab.boundlab import (
    check_large_color,
    check_path_components,
    check_suffix_lemma,
    extract_certificate,
)
from rwlab.gd_builder import build_gd
from rwlab.graph_core import Graph, bit_indices, gf2_rank, induced_subgraph
from rwlab.rankdec import (
    _edge_side_masks,
    caterpillar_decomposition,
    decomposition_width,
    exact_rankwidth,
    leaf_labeled_cubic_trees,
    random_decomposition,
)
from rwlab.tuple_order import check_parity_lemmas, enumerate_universe
from rwlab.verify import find_clique_cutset, find_diamond, find_even_hole, iter_holes, structural_holes


@pytest.fixture(scope="module")
def caterpillars(gd):
    """d -> (decomposition, width report) for the explicit caterpillars."""
    cache = {}

    def get(d):
        if d not in cache:
            art = gd(d)
            dec = caterpillar_decomposition(art)
            cache[d] = (dec, decomposition_width(art.graph, dec))
        return cache[d]

    return get


def announce(num, name):
    print(f"ACCEPTANCE {num:02d} {name}: PASS")


def test_criterion_01_universe_sizes():
    t0 = time.perf_counter()
    for d in range(1, 13):
        assert len(enumerate_universe(d)) == 4 * (2**d - 1)
    assert time.perf_counter() - t0 < 1.0
    announce(1, "universe sizes 4(2^d-1) for d<=12")


def test_criterion_02_parity_lemmas():
    t0 = time.perf_counter()
    for d in range(1, 9):
        report = check_parity_lemmas(d)
        assert report.passed, f"parity failed at d={d}: {report.counterexample}"
    assert time.perf_counter() - t0 < 60.0
    announce(2, "flat-step parity over all proper intervals d<=8")


def test_criterion_03a_diamond_free(gd):
    t0 = time.perf_counter()
    for d in range(1, 9):
        assert find_diamond(gd(d).graph) is None, f"diamond at d={d}"
    assert time.perf_counter() - t0 < 10.0
    announce(3, "diamond-free d<=8")


def test_criterion_03b_even_hole_free_exhaustive(gd):
    t0 = time.perf_counter()
    for d in range(1, 4):
        assert find_even_hole(gd(d).graph) is None, f"even hole at d={d}"
    assert time.perf_counter() - t0 < 120.0
    announce(3, "even-hole-free by full enumeration d<=3")


def test_criterion_03c_structural_holes_odd(gd):
    for d in range(1, 7):
        holes = structural_holes(gd(d))
        assert holes, f"no holes reported at d={d}"
        assert all(h.length % 2 == 1 for h in holes), f"even structural hole at d={d}"
    announce(3, "structural holes all odd d<=6")


def test_criterion_03d_no_clique_cutset(gd):
    t0 = time.perf_counter()
    for d in range(2, 7):
        assert find_clique_cutset(gd(d).graph) is None, f"clique cutset at d={d}"
    assert time.perf_counter() - t0 < 60.0
    announce(3, "no clique cutset 2<=d<=6")


def test_criterion_04_cross_oracle_hole_sets(gd):
    for d in range(1, 4):
        art = gd(d)
        structural = sorted(h.cycle for h in structural_holes(art))
        enumerated = sorted(iter_holes(art.graph))
        assert structural == enumerated, f"hole sets differ at d={d}"
    announce(4, "structural and enumerated hole sets identical d<=3")


def test_criterion_05_caterpillar_upper_bound(gd, caterpillars):
    t0 = time.perf_counter()
    for d in range(1, 9):
        _, report = caterpillars(d)
        assert report.width <= d + 1, f"caterpillar width {report.width} > {d + 1} at d={d}"
        assert len(report.per_edge) == 2 * gd(d).graph.n - 3
    assert time.perf_counter() - t0 < 120.0
    announce(5, "caterpillar width <= d+1 per edge d<=8")


def _cutrank_table(g):
    bits = g.adjacency_bits
    full = (1 << g.n) - 1
    table = [0] * (full + 1)
    for mask in range(1, full):
        comp = full ^ mask
        if comp < mask:
            table[mask] = table[comp]
        else:
            table[mask] = gf2_rank(bits[u] & comp for u in bit_indices(mask))
    return table


def _tree_mask_lists(n):
    return [list(_edge_side_masks(dec).values()) for dec in leaf_labeled_cubic_trees(range(n))]


def _brute_force_width(table, tree_masks, upper):
    best = upper
    for masks in tree_masks:
        w = 0
        for m in masks:
            t = table[m]
            if t > w:
                w = t
                if w >= best:
                    break
        if w < best:
            best = w
    return best


def test_criterion_06_exact_solver_against_enumeration():
    for n in range(2, 9):
        value, dec = exact_rankwidth(complete_graph(n))
        assert value == 1
        assert decomposition_width(complete_graph(n), dec).width == 1

    # every labeled graph on up to 6 vertices, against all (2n-5)!! trees
    for n in range(2, 7):
        tree_masks = _tree_mask_lists(n)
        pairs = list(combinations(range(n), 2))
        for gmask in range(1 << len(pairs)):
            g = Graph(n, [pairs[i] for i in range(len(pairs)) if (gmask >> i) & 1])
            value, _ = exact_rankwidth(g)
            assert value == _brute_force_width(_cutrank_table(g), tree_masks, n), (n, gmask)

    # 100 random graphs at n in {7, 8}
    rng = random.Random(60606)
    for n in (7, 8):
        tree_masks = _tree_mask_lists(n)
        for _ in range(50):
            g = random_graph(rng, n, rng.choice((0.3, 0.5, 0.7)))
            value, _ = exact_rankwidth(g)
            assert value == _brute_force_width(_cutrank_table(g), tree_masks, n)

    # distance-hereditary families sit at width 1
    for n in range(2, 9):
        assert exact_rankwidth(path_graph(n))[0] == 1
    for a in range(1, 5):
        for b in range(a, 9 - a):
            assert exact_rankwidth(complete_bipartite(a, b))[0] == 1
    announce(6, "exact solver matches cubic-tree enumeration")


def test_criterion_07_monotonicity():
    rng = random.Random(70707)
    done = 0
    while done < 200:
        n = rng.randrange(2, 9)
        g = random_graph(rng, n, rng.choice((0.3, 0.5, 0.7)))
        keep = [v for v in range(n) if rng.random() < 0.7]
        sub = induced_subgraph(g, keep)
        if sub.n == 0:
            continue
        assert exact_rankwidth(sub)[0] <= exact_rankwidth(g)[0]
        done += 1
    announce(7, "rank-width monotone under induced subgraphs (200 pairs)")


def test_criterion_08_path_component_bound(gd, caterpillars):
    for d in range(1, 6):
        art = gd(d)
        dec, report = caterpillars(d)
        p = list(art.path_vertices)
        for e in dec.edges():
            res = check_path_components(art.graph, p, dec, e)
            assert res.passed, f"run count beats width+1 at d={d}, edge {e}"
            assert res.edge_width <= report.width
    announce(8, "path run counts within width+1 on every caterpillar edge d<=5")


def _assert_identity(art, cert):
    bits = art.graph.adjacency_bits
    y_mask = 0
    for v in cert.s_y:
        y_mask |= 1 << v
    for vx, vy in zip(cert.s_x, cert.s_y):
        assert bits[vx] & y_mask == 1 << vy


def test_criterion_09_certificate_soundness(gd, caterpillars):
    for d in range(1, 9):
        art = gd(d)
        dec, report = caterpillars(d)
        cert = extract_certificate(art, dec, width_report=report)
        assert cert.bound <= cert.edge_width <= report.width
        _assert_identity(art, cert)
    rng = random.Random(90909)
    for d in (2, 3):
        art = gd(d)
        for _ in range(100):
            dec = random_decomposition(range(art.graph.n), rng)
            cert = extract_certificate(art, dec)
            assert cert.bound <= cert.edge_width <= cert.decomposition_width
            _assert_identity(art, cert)
    announce(9, "certificate bound <= certified edge width, identity rows")


def test_criterion_10_suffix_and_large_color():
    t0 = time.perf_counter()
    for d in range(1, 6):
        report = check_suffix_lemma(d)
        assert report.passed, f"suffix scan failed at d={d}: {report.counterexample}"
    half = check_large_color(13, (1 / 2,))
    assert half.entries[0].status == "passed"
    eighth = check_large_color(11, (1 / 8,))
    assert eighth.entries[0].status == "passed"
    assert time.perf_counter() - t0 < 300.0
    announce(10, "suffix windows d<=5; large windows at (13, 1/2) and (11, 1/8)")
