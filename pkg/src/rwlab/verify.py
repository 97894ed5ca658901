"""Structure oracles: diamonds, chordless cycles, and clique cutsets.

find_diamond and the hole enumerator are graph-generic and exhaustive.  The
structural enumerator instead reads candidate holes straight off the family
layout and re-verifies them against the adjacency, giving an independent
cross-check of the generic search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .gd_builder import GdArtifacts
from .graph_core import Graph, bit_indices, connected_components
from .tuple_order import Interval, iter_proper_intervals

DEFAULT_HOLE_CAP = 10**6


class HoleOverflowError(RuntimeError):
    """Raised when hole enumeration exceeds its cap; never truncates silently."""

    def __init__(self, cap: int):
        super().__init__(f"hole count exceeded cap of {cap}")
        self.cap = cap


@dataclass(frozen=True)
class DiamondWitness:
    """Four vertices inducing a diamond: the apex pair is adjacent to all
    three others, the missing pair is the one nonadjacency."""

    apex: tuple[int, int]
    missing: tuple[int, int]

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.apex + self.missing))


def find_diamond(g: Graph) -> DiamondWitness | None:
    """First diamond found by scanning each edge for two nonadjacent common
    neighbors, or None."""
    bits = g.adjacency_bits
    for u, v in g.edges():
        common = bits[u] & bits[v]
        if common.bit_count() < 2:
            continue
        for w in bit_indices(common):
            rest = common & ~bits[w] & ~(1 << w)
            if rest:
                x = (rest & -rest).bit_length() - 1
                return DiamondWitness((u, v), tuple(sorted((w, x))))
    return None


def canonical_cycle(cycle) -> tuple[int, ...]:
    """Rotate to start at the minimum vertex, oriented toward its smaller neighbor."""
    cyc = list(cycle)
    k = cyc.index(min(cyc))
    cyc = cyc[k:] + cyc[:k]
    if cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return tuple(cyc)


def _extend_hole(bits, allowed: int, path: list[int], path_mask: int, interior_mask: int):
    last = path[-1]
    anchor_bit = 1 << path[0]
    for w in bit_indices(bits[last] & allowed & ~path_mask):
        wb = 1 << w
        if bits[w] & interior_mask:
            continue  # chord against a non-endpoint path vertex
        if bits[w] & anchor_bit:
            if len(path) >= 3 and path[1] < w:
                yield tuple(path) + (w,)
        else:
            yield from _extend_hole(bits, allowed, path + [w], path_mask | wb, interior_mask | (1 << last))


def iter_holes(g: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every chordless cycle of length >= 4 exactly once, canonically.

    Depth-first extension of induced paths anchored at their minimum vertex;
    any extension adjacent to a non-endpoint path vertex would create a chord
    and is pruned.  Cycles close back to the anchor with the second vertex
    smaller than the last, which fixes rotation and orientation.
    """
    bits = g.adjacency_bits
    for v0 in range(g.n):
        allowed = ~((1 << (v0 + 1)) - 1)
        for v1 in bit_indices(bits[v0] & allowed):
            yield from _extend_hole(bits, allowed, [v0, v1], (1 << v0) | (1 << v1), 0)


def enumerate_holes(g: Graph, cap: int = DEFAULT_HOLE_CAP) -> list[tuple[int, ...]]:
    """All chordless cycles of length >= 4; raises HoleOverflowError past cap."""
    out: list[tuple[int, ...]] = []
    for cyc in iter_holes(g):
        out.append(cyc)
        if len(out) > cap:
            raise HoleOverflowError(cap)
    return out


def find_even_hole(g: Graph, cap: int = DEFAULT_HOLE_CAP) -> tuple[int, ...] | None:
    """First even chordless cycle of length >= 4, or None; same cap contract."""
    count = 0
    for cyc in iter_holes(g):
        count += 1
        if count > cap:
            raise HoleOverflowError(cap)
        if len(cyc) % 2 == 0:
            return cyc
    return None


@dataclass(frozen=True)
class StructuralHole:
    """A hole read off the family layout: a proper interval's path segment
    closed through one center (equal endpoint lengths) or two (mixed)."""

    center_levels: tuple[int, ...]
    interval: Interval
    cycle: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle)


def _require_chordless(bits, cycle) -> None:
    mask = 0
    for v in cycle:
        mask |= 1 << v
    k = len(cycle)
    for idx, v in enumerate(cycle):
        expected = (1 << cycle[(idx - 1) % k]) | (1 << cycle[(idx + 1) % k])
        if bits[v] & mask != expected:
            raise RuntimeError(f"structural candidate is not a chordless cycle at vertex {v}")


def structural_holes(art: GdArtifacts) -> list[StructuralHole]:
    """Enumerate the candidate holes dictated by the family layout.

    Every proper interval contributes one candidate: its path segment closed
    through the endpoint-level center (equal endpoint lengths) or through
    both endpoint-level centers (mixed lengths).  Each candidate is verified
    chordless against the adjacency before being returned.
    """
    bits = art.graph.adjacency_bits
    holes = []
    for i, j, _flats in iter_proper_intervals(art.universe):
        a, b = art.universe[i], art.universe[j]
        seg = art.path_vertices[art.tuple_positions[a] : art.tuple_positions[b] + 1]
        la, lb = len(a), len(b)
        if la == lb:
            cycle = (art.centers[la - 1],) + tuple(seg)
            levels = (la,)
        else:
            cycle = (art.centers[la - 1],) + tuple(seg) + (art.centers[lb - 1],)
            levels = tuple(sorted((la, lb)))
        _require_chordless(bits, cycle)
        holes.append(StructuralHole(levels, Interval(a, b, art.d), canonical_cycle(cycle)))
    return holes


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques via pivoting Bron-Kerbosch over bitmasks, sorted."""
    if g.n == 0:
        return []
    bits = g.adjacency_bits
    out: list[tuple[int, ...]] = []

    def bk(r_mask: int, p_mask: int, x_mask: int) -> None:
        if not p_mask and not x_mask:
            out.append(tuple(bit_indices(r_mask)))
            return
        px = p_mask | x_mask
        pivot = max(bit_indices(px), key=lambda u: (p_mask & bits[u]).bit_count())
        for v in bit_indices(p_mask & ~bits[pivot]):
            vb = 1 << v
            bk(r_mask | vb, p_mask & bits[v], x_mask & bits[v])
            p_mask &= ~vb
            x_mask |= vb

    bk(0, (1 << g.n) - 1, 0)
    out.sort()
    return out


@dataclass(frozen=True)
class CliqueCutsetWitness:
    clique: tuple[int, ...]
    separated: tuple[int, int]


def find_clique_cutset(g: Graph) -> CliqueCutsetWitness | None:
    """A clique whose removal disconnects g, plus two separated vertices.

    Every clique sits inside some maximal clique, so trying all subsets of
    all maximal cliques is exhaustive.  Cliques are visited in sorted order
    and subsets by size then position, making the witness deterministic.
    Rejects disconnected input, where the notion is ill-posed.
    """
    if len(connected_components(g)) != 1:
        raise ValueError("clique cutset search needs a connected graph")
    tried: set[tuple[int, ...]] = set()
    for clique in maximal_cliques(g):
        for size in range(1, len(clique) + 1):
            for subset in combinations(clique, size):
                if subset in tried:
                    continue
                tried.add(subset)
                comps = _components_after_removal(g, set(subset))
                if len(comps) >= 2:
                    return CliqueCutsetWitness(subset, (comps[0][0], comps[1][0]))
    return None


def _components_after_removal(g: Graph, removed: set[int]) -> list[list[int]]:
    seen = set(removed)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        comp = [start]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        comps.append(sorted(comp))
    return comps
