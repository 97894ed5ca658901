"""Undirected labeled graphs, bitset adjacency, and the binary-field cut rank.

Adjacency rows are exposed as arbitrary-precision integers (bit v of row u is
set iff uv is an edge), which makes Gaussian elimination over GF(2) a loop of
XORs.  Graphs are immutable once constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .tuple_order import format_tuple, parse_tuple


@dataclass(frozen=True)
class TupleVertex:
    value: tuple[int, ...]


@dataclass(frozen=True)
class SubdivisionVertex:
    """Vertex splitting the step from lo to its successor hi; ordinal counts from lo."""

    lo: tuple[int, ...]
    hi: tuple[int, ...]
    ordinal: int

    def __post_init__(self) -> None:
        if self.ordinal not in (1, 2):
            raise ValueError(f"subdivision ordinal must be 1 or 2, got {self.ordinal}")


@dataclass(frozen=True)
class CenterVertex:
    index: int  # 1-based level


VertexLabel = TupleVertex | SubdivisionVertex | CenterVertex | str


def label_text(label: VertexLabel) -> str:
    if isinstance(label, TupleVertex):
        return format_tuple(label.value)
    if isinstance(label, SubdivisionVertex):
        return f"sub{label.ordinal}:{format_tuple(label.lo)}>{format_tuple(label.hi)}"
    if isinstance(label, CenterVertex):
        return f"v{label.index}"
    return str(label)


def parse_label(text: str) -> VertexLabel:
    """Inverse of label_text; unrecognized text is kept as a plain string."""
    if text.startswith("(") and text.endswith(")"):
        try:
            return TupleVertex(parse_tuple(text))
        except ValueError:
            return text
    if text.startswith("sub") and ":" in text:
        head, _, rest = text.partition(":")
        lo_text, sep, hi_text = rest.partition(">")
        if sep and head[3:].isdigit():
            try:
                return SubdivisionVertex(parse_tuple(lo_text), parse_tuple(hi_text), int(head[3:]))
            except ValueError:
                return text
    if len(text) > 1 and text[0] == "v" and text[1:].isdigit():
        return CenterVertex(int(text[1:]))
    return text


class Graph:
    """Immutable simple graph on vertices 0..n-1 with optional labels."""

    __slots__ = ("_n", "_adj", "_labels", "_m", "_bits")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[VertexLabel | None] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if labels is not None and len(labels) != n:
            raise ValueError(f"label list has {len(labels)} entries for {n} vertices")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop rejected at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._labels = tuple(labels) if labels is not None else None
        self._m = sum(len(s) for s in self._adj) // 2
        self._bits: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def labels(self) -> tuple[VertexLabel | None, ...] | None:
        return self._labels

    def label(self, v: int) -> VertexLabel | None:
        return self._labels[v] if self._labels is not None else None

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        return [(u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v]

    @property
    def adjacency_bits(self) -> tuple[int, ...]:
        """Adjacency rows packed as integers; built lazily and cached."""
        if self._bits is None:
            rows = []
            for s in self._adj:
                row = 0
                for v in s:
                    row |= 1 << v
                rows.append(row)
            self._bits = tuple(rows)
        return self._bits


def bit_indices(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of integer-packed row vectors (in-place elimination)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            high = cur.bit_length() - 1
            piv = pivots.get(high)
            if piv is None:
                pivots[high] = cur
                rank += 1
                break
            cur ^= piv
    return rank


def cutrank_bits(g: Graph, mask: int) -> int:
    """Cut rank of the vertex set encoded as a bitmask."""
    full = (1 << g.n) - 1
    if mask & ~full:
        raise ValueError("vertex mask out of range")
    comp = full ^ mask
    if mask.bit_count() > comp.bit_count():
        mask, comp = comp, mask
    bits = g.adjacency_bits
    return gf2_rank(bits[u] & comp for u in bit_indices(mask))


def cutrank(g: Graph, xs: Iterable[int]) -> int:
    """Rank over the binary field of the adjacency block between xs and the rest.

    Rows are taken from the smaller side of the cut; the value is symmetric
    in the two sides.
    """
    mask = 0
    for v in xs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex out of range: {v}")
        mask |= 1 << v
    return cutrank_bits(g, mask)


def induced_subgraph(g: Graph, xs: Iterable[int]) -> Graph:
    """Subgraph induced by xs, renumbered in sorted order, labels carried over."""
    keep = sorted(set(xs))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex out of range: {v}")
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[w])
        for u in keep
        for w in g.neighbors(u)
        if u < w and w in index
    ]
    labels = [g.label(v) for v in keep] if g.labels is not None else None
    return Graph(len(keep), edges, labels)


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = [start]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(sorted(comp))
    return comps


# ---------------------------------------------------------------------------
# Graph file formats


def write_edgelist(g: Graph, include_labels: bool = False) -> str:
    """Canonical edge-list text: "p <n> <m>" header, label comments, sorted edges."""
    lines = [f"p {g.n} {g.m}"]
    if include_labels and g.labels is not None:
        for v in range(g.n):
            lab = g.label(v)
            if lab is not None:
                lines.append(f"c label {v} {label_text(lab)}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edgelist(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, VertexLabel] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split(maxsplit=3)
            if len(parts) == 4 and parts[1] == "label":
                labels[int(parts[2])] = parse_label(parts[3])
            continue
        if line.startswith("p"):
            _, n_text, m_text = line.split()
            n, m = int(n_text), int(m_text)
            continue
        u_text, v_text = line.split()
        edges.append((int(u_text), int(v_text)))
    if n is None:
        raise ValueError("missing 'p <n> <m>' header")
    if m is not None and len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    label_list = [labels.get(v) for v in range(n)] if labels else None
    return Graph(n, edges, label_list)


def write_dimacs(g: Graph, include_labels: bool = False) -> str:
    """DIMACS-like text: "p edge <n> <m>" with 1-based "e u v" lines."""
    lines = [f"p edge {g.n} {g.m}"]
    if include_labels and g.labels is not None:
        for v in range(g.n):
            lab = g.label(v)
            if lab is not None:
                lines.append(f"c label {v} {label_text(lab)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, VertexLabel] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split(maxsplit=3)
            if len(parts) == 4 and parts[1] == "label":
                labels[int(parts[2])] = parse_label(parts[3])
            continue
        if line.startswith("p"):
            _, kind, n_text, m_text = line.split()
            if kind != "edge":
                raise ValueError(f"unsupported problem kind: {kind}")
            n, m = int(n_text), int(m_text)
            continue
        if line.startswith("e"):
            _, u_text, v_text = line.split()
            edges.append((int(u_text) - 1, int(v_text) - 1))
    if n is None:
        raise ValueError("missing 'p edge <n> <m>' header")
    if m is not None and len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    label_list = [labels.get(v) for v in range(n)] if labels else None
    return Graph(n, edges, label_list)


def to_dot(g: Graph, include_labels: bool = True, name: str = "g") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lab = g.label(v)
        if include_labels and lab is not None:
            lines.append(f'  {v} [label="{label_text(lab)}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph_text(text: str) -> Graph:
    """Parse either edge-list ("p <n> <m>") or DIMACS ("p edge <n> <m>") text."""
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("p"):
            parts = line.split()
            if len(parts) >= 2 and parts[1] == "edge":
                return read_dimacs(text)
            return read_edgelist(text)
    raise ValueError("no problem header found")
