"""Shared test utilities: small graph builders and brute-force oracles."""

from __future__ import annotations

import random
from itertools import combinations

from rwlab.graph_core import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def naive_rank_mod2(rows: list[list[int]]) -> int:
    """Textbook row reduction over integers mod 2; the independent rank oracle."""
    mat = [row[:] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % 2 == 1), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % 2 == 1:
                mat[r] = [(x + y) % 2 for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def brute_force_diamond_exists(g: Graph) -> bool:
    """A 4-subset induces a diamond exactly when it spans 5 edges."""
    for quad in combinations(range(g.n), 4):
        m = sum(1 for u, v in combinations(quad, 2) if g.has_edge(u, v))
        if m == 5:
            return True
    return False


def brute_force_holes(g: Graph) -> set[tuple[int, ...]]:
    """Canonical vertex tuples of all induced cycles of length >= 4.

    A subset induces a cycle iff the induced subgraph is connected and
    2-regular; the cycle order is recovered by walking neighbors.
    """
    from rwlab.graph_core import connected_components, induced_subgraph
    from rwlab.verify import canonical_cycle

    found = set()
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            subset = set(sub)
            degs = [len(g.neighbors(v) & subset) for v in sub]
            if any(deg != 2 for deg in degs):
                continue
            if len(connected_components(induced_subgraph(g, sub))) != 1:
                continue
            walk = [sub[0]]
            prev = None
            while len(walk) < size:
                nxt = sorted(g.neighbors(walk[-1]) & subset - {prev} - {walk[-1]})
                prev = walk[-1]
                walk.append(nxt[0])
            found.add(canonical_cycle(walk))
    return found


def brute_force_maximal_cliques(g: Graph) -> set[tuple[int, ...]]:
    cliques = set()
    for size in range(1, g.n + 1):
        for sub in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                cliques.add(sub)
    return {
        c
        for c in cliques
        if not any(set(c) < set(other) for other in cliques if len(other) > len(c))
    }
