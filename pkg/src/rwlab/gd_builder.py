"""Builders for the layered path-plus-clique graph family.

For depth d the tuple universe is laid out along a path, each step is
subdivided once (twice when flat), and d pairwise-adjacent centers are
attached, the k-th center adjacent to every length-k tuple vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import CenterVertex, Graph, SubdivisionVertex, TupleVertex
from .tuple_order import Interval, enumerate_universe


@dataclass(frozen=True)
class GdArtifacts:
    """A built family member plus the bookkeeping the analyses rely on.

    Path vertices occupy indices 0..len(path)-1 in path order, so a tuple's
    vertex index doubles as its path position; centers follow, lowest level
    first.
    """

    d: int
    graph: Graph
    path_vertices: tuple[int, ...]
    centers: tuple[int, ...]
    tuple_positions: dict[tuple[int, ...], int]
    universe: tuple[tuple[int, ...], ...]


def build_gd(d: int) -> GdArtifacts:
    """Construct the depth-d family member with deterministic vertex indices."""
    universe = enumerate_universe(d)  # rejects d < 1
    labels: list = []
    tuple_positions: dict[tuple[int, ...], int] = {}
    for idx, t in enumerate(universe):
        tuple_positions[t] = len(labels)
        labels.append(TupleVertex(t))
        if idx + 1 < len(universe):
            nxt = universe[idx + 1]
            labels.append(SubdivisionVertex(t, nxt, 1))
            if len(t) == len(nxt):
                labels.append(SubdivisionVertex(t, nxt, 2))
    path_len = len(labels)
    centers = tuple(range(path_len, path_len + d))
    labels.extend(CenterVertex(k) for k in range(1, d + 1))

    edges = [(i, i + 1) for i in range(path_len - 1)]
    edges.extend((centers[i], centers[j]) for i in range(d) for j in range(i + 1, d))
    edges.extend((centers[len(t) - 1], pos) for t, pos in tuple_positions.items())

    graph = Graph(path_len + d, edges, labels)
    return GdArtifacts(d, graph, tuple(range(path_len)), centers, tuple_positions, universe)


def interval_path(art: GdArtifacts, iv: Interval) -> tuple[int, ...]:
    """Path vertices from iv.lo to iv.hi inclusive, in path order.

    The number of edges is odd exactly when the interval holds an odd number
    of flat steps (flat steps contribute three edges, others two).
    """
    if iv.depth != art.d:
        raise ValueError(f"interval depth {iv.depth} does not match artifacts depth {art.d}")
    lo = art.tuple_positions[iv.lo]
    hi = art.tuple_positions[iv.hi]
    return art.path_vertices[lo : hi + 1]


def path_levels(d: int) -> list[int]:
    """Tuple length per path position, 0 for subdivision vertices.

    Cheap at depths where full adjacency would not fit in memory; the window
    scans need only this profile plus the total vertex count.
    """
    universe = enumerate_universe(d)
    levels: list[int] = []
    for idx, t in enumerate(universe):
        levels.append(len(t))
        if idx + 1 < len(universe):
            levels.append(0)
            if len(t) == len(universe[idx + 1]):
                levels.append(0)
    return levels


def gd_vertex_count(d: int) -> int:
    """Order of the depth-d family member, without building the graph."""
    return len(path_levels(d)) + d
