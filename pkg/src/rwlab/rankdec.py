"""Rank decompositions: width evaluation, balanced edges, caterpillars, and
an exact subset-DP minimizer for small graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .gd_builder import GdArtifacts
from .graph_core import Graph, bit_indices, gf2_rank


class RankDecomposition:
    """Cubic tree plus a bijection from graph vertices to its leaves.

    Construction validates everything: the edge list forms a connected
    acyclic graph on at least two nodes, every internal node has degree
    exactly 3, and leaf_map is a bijection onto the leaves.
    """

    __slots__ = ("_adj", "_leaf_map", "_vertex_of_leaf")

    def __init__(self, edges: Iterable[tuple[int, int]], leaf_map: Mapping[int, int]):
        adj: dict[int, set[int]] = {}
        for a, b in edges:
            if a == b:
                raise ValueError("tree edges cannot be loops")
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        if len(adj) < 2:
            raise ValueError("a rank decomposition tree needs at least two nodes")
        edge_count = sum(len(s) for s in adj.values()) // 2
        if edge_count != len(adj) - 1:
            raise ValueError("node and edge counts do not form a tree")
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(adj):
            raise ValueError("tree is not connected")
        leaves = {node for node, nbrs in adj.items() if len(nbrs) == 1}
        for node, nbrs in adj.items():
            if node not in leaves and len(nbrs) != 3:
                raise ValueError(f"internal node {node} has degree {len(nbrs)}, expected 3")
        mapped = list(leaf_map.values())
        if len(set(mapped)) != len(mapped) or set(mapped) != leaves:
            raise ValueError("leaf_map is not a bijection onto the tree leaves")
        self._adj = {node: frozenset(nbrs) for node, nbrs in adj.items()}
        self._leaf_map = dict(leaf_map)
        self._vertex_of_leaf = {leaf: v for v, leaf in leaf_map.items()}

    @property
    def leaf_map(self) -> dict[int, int]:
        return dict(self._leaf_map)

    def vertices(self) -> frozenset[int]:
        return frozenset(self._leaf_map)

    def vertex_at(self, leaf: int) -> int:
        return self._vertex_of_leaf[leaf]

    def is_leaf(self, node: int) -> bool:
        return node in self._vertex_of_leaf

    def nodes(self) -> list[int]:
        return sorted(self._adj)

    def leaves(self) -> list[int]:
        return sorted(self._vertex_of_leaf)

    def neighbors(self, node: int) -> frozenset[int]:
        return self._adj[node]

    def has_edge(self, a: int, b: int) -> bool:
        return a in self._adj and b in self._adj[a]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a in self._adj for b in self._adj[a] if a < b)


@dataclass(frozen=True)
class WidthReport:
    per_edge: dict[tuple[int, int], int]
    width: int

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "width": self.width,
            "per_edge": [
                {"edge": [a, b], "width": w} for (a, b), w in sorted(self.per_edge.items())
            ],
        }


def _edge_side_masks(dec: RankDecomposition) -> dict[tuple[int, int], int]:
    """For each tree edge, the vertex bitmask of its child side (rooted at the
    smallest node id)."""
    root = dec.nodes()[0]
    parent: dict[int, int | None] = {root: None}
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in dec.neighbors(u):
            if w not in parent:
                parent[w] = u
                order.append(w)
                stack.append(w)
    mask = {node: 0 for node in parent}
    for node in reversed(order):
        if dec.is_leaf(node):
            mask[node] |= 1 << dec.vertex_at(node)
        p = parent[node]
        if p is not None:
            mask[p] |= mask[node]
    return {
        (node, p) if node < p else (p, node): mask[node]
        for node, p in parent.items()
        if p is not None
    }


def edge_partition(dec: RankDecomposition, e: tuple[int, int]) -> tuple[frozenset[int], frozenset[int]]:
    """Graph-vertex sets on the two sides of tree edge e, in e's endpoint order."""
    a, b = e
    if not dec.has_edge(a, b):
        raise ValueError(f"({a}, {b}) is not a tree edge")
    seen = {a, b}
    stack = [a]
    side_a = set()
    while stack:
        u = stack.pop()
        if dec.is_leaf(u):
            side_a.add(dec.vertex_at(u))
        for w in dec.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(side_a), dec.vertices() - frozenset(side_a)


def decomposition_width(g: Graph, dec: RankDecomposition) -> WidthReport:
    """Cut rank of every tree edge plus their maximum."""
    if dec.vertices() != frozenset(range(g.n)):
        raise ValueError("decomposition leaves do not match the graph vertex set")
    full = (1 << g.n) - 1
    bits = g.adjacency_bits
    per_edge: dict[tuple[int, int], int] = {}
    for e, mask in _edge_side_masks(dec).items():
        comp = full ^ mask
        small, other = (mask, comp) if mask.bit_count() <= comp.bit_count() else (comp, mask)
        per_edge[e] = gf2_rank(bits[u] & other for u in bit_indices(small))
    return WidthReport(per_edge=per_edge, width=max(per_edge.values(), default=0))


def balanced_edge(dec: RankDecomposition) -> tuple[int, int]:
    """A tree edge whose leaf split keeps both sides at a third of the leaves
    or more.

    Ties resolve toward the largest minimum side, then the smallest edge id,
    so repeated runs return the same edge.
    """
    masks = _edge_side_masks(dec)
    total = len(dec.leaves())
    best = None
    best_min = -1
    for e in sorted(masks):
        cnt = masks[e].bit_count()
        side_min = min(cnt, total - cnt)
        if side_min > best_min:
            best, best_min = e, side_min
    assert best is not None
    if 3 * best_min < total:
        raise RuntimeError("no balanced edge; the tree cannot be cubic")
    return best


def caterpillar_from_order(order: Sequence[int]) -> RankDecomposition:
    """Caterpillar tree whose leaves take the given vertex order along the spine.

    Leaf node ids are the order positions, spine node ids follow; the two
    outermost leaves share the end spine nodes.
    """
    count = len(order)
    if count < 2:
        raise ValueError("need at least two vertices")
    leaf_map = {v: i for i, v in enumerate(order)}
    if count == 2:
        return RankDecomposition([(0, 1)], leaf_map)
    spine = list(range(count, count + count - 2))
    edges = [(0, spine[0]), (1, spine[0])]
    for i in range(1, len(spine)):
        edges.append((spine[i - 1], spine[i]))
        edges.append((i + 1, spine[i]))
    edges.append((count - 1, spine[-1]))
    return RankDecomposition(edges, leaf_map)


def caterpillar_decomposition(art: GdArtifacts) -> RankDecomposition:
    """The explicit caterpillar over centers first, then the path in order.

    Its width never exceeds d+1: past the center block, the vertices on the
    far side of any spine cut see at most the d centers plus one path
    neighborhood boundary, so their row space has at most d+1 generators.
    """
    return caterpillar_from_order(list(art.centers) + list(art.path_vertices))


def exact_rankwidth(g: Graph, limit: int = 16) -> tuple[int, RankDecomposition | None]:
    """Exact rank-width by dynamic programming over vertex subsets.

    cost(S) = min over bipartitions S = A + B of max(cost(A), cost(B),
    cutrank(A), cutrank(B)); singletons cost 0 and the answer sits at S = V.
    Returns (0, None) on at most one vertex, otherwise the value and a
    witness decomposition rebuilt from the chosen splits.  Work grows like
    3^n, hence the size limit.
    """
    n = g.n
    if n > limit:
        raise ValueError(f"graph has {n} vertices, above the limit of {limit}")
    if n <= 1:
        return 0, None
    bits = g.adjacency_bits
    full = (1 << n) - 1
    table = [0] * (full + 1)
    for mask in range(1, full):
        comp = full ^ mask
        if comp < mask:
            table[mask] = table[comp]
            continue
        small, other = (mask, comp) if mask.bit_count() <= comp.bit_count() else (comp, mask)
        table[mask] = gf2_rank(bits[u] & other for u in bit_indices(small))

    cost = [0] * (full + 1)
    split: dict[int, tuple[int, int]] = {}
    for s in range(3, full + 1):
        if s.bit_count() < 2:
            continue
        low = s & -s
        best = None
        best_pair = None
        sub = (s - 1) & s
        while sub:
            if sub & low:
                other = s ^ sub
                cand = max(cost[sub], cost[other], table[sub], table[other])
                if best is None or cand < best:
                    best, best_pair = cand, (sub, other)
            sub = (sub - 1) & s
        cost[s] = best
        split[s] = best_pair
    value = cost[full]

    next_internal = n
    edges: list[tuple[int, int]] = []

    def attach(mask: int) -> int:
        nonlocal next_internal
        if mask.bit_count() == 1:
            return mask.bit_length() - 1
        a, b = split[mask]
        node = next_internal
        next_internal += 1
        edges.append((node, attach(a)))
        edges.append((node, attach(b)))
        return node

    a, b = split[full]
    edges.append((attach(a), attach(b)))
    dec = RankDecomposition(edges, {v: v for v in range(n)})
    return value, dec


def leaf_labeled_cubic_trees(leaves: Sequence[int]) -> Iterator[RankDecomposition]:
    """Every cubic tree with exactly the given leaves; (2n-5)!! of them.

    Grown by subdividing an existing edge with a fresh internal node and
    hanging the next leaf from it.  Internal ids start above the leaf ids,
    and each leaf maps to the node with its own id.
    """
    leaves = list(leaves)
    n = len(leaves)
    if n < 2:
        raise ValueError("need at least two leaves")
    leaf_map = {v: v for v in leaves}
    base = max(leaves) + 1
    trees: list[list[tuple[int, int]]] = [[(leaves[0], leaves[1])]]
    for k in range(2, n):
        node = base + (k - 2)
        nxt: list[list[tuple[int, int]]] = []
        for tree in trees:
            for idx, (a, b) in enumerate(tree):
                grown = tree[:idx] + tree[idx + 1 :]
                grown.extend(((a, node), (node, b), (node, leaves[k])))
                nxt.append(grown)
        trees = nxt
    for tree in trees:
        yield RankDecomposition(tree, leaf_map)


def random_decomposition(vertices: Sequence[int], rng: random.Random) -> RankDecomposition:
    """Random cubic tree over the given vertices via random edge insertion."""
    verts = list(vertices)
    if len(verts) < 2:
        raise ValueError("need at least two vertices")
    base = max(verts) + 1
    edges = [(verts[0], verts[1])]
    for k in range(2, len(verts)):
        a, b = edges.pop(rng.randrange(len(edges)))
        node = base + (k - 2)
        edges.extend(((a, node), (node, b), (node, verts[k])))
    return RankDecomposition(edges, {v: v for v in verts})


def serialize_decomposition(dec: RankDecomposition) -> str:
    """Canonical line format: node declarations sorted by id, then sorted edges."""
    lines = []
    for node in dec.nodes():
        if dec.is_leaf(node):
            lines.append(f"node {node} leaf {dec.vertex_at(node)}")
        else:
            lines.append(f"node {node} internal")
    lines.extend(f"edge {a} {b}" for a, b in dec.edges())
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> RankDecomposition:
    edges: list[tuple[int, int]] = []
    leaf_map: dict[int, int] = {}
    declared: set[int] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "node" and len(parts) in (3, 4):
            node = int(parts[1])
            declared.add(node)
            if parts[2] == "leaf" and len(parts) == 4:
                leaf_map[int(parts[3])] = node
            elif parts[2] != "internal" or len(parts) != 3:
                raise ValueError(f"bad node line: {raw!r}")
        elif parts[0] == "edge" and len(parts) == 3:
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"unrecognized line: {raw!r}")
    dec = RankDecomposition(edges, leaf_map)
    if declared != set(dec.nodes()):
        raise ValueError("declared nodes do not match the edge list")
    return dec
