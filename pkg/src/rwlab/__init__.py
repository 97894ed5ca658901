"""Rank-width toolkit around a family of diamond-free graphs whose holes are
all odd and which have no clique cutset.

The pieces: tuple_order holds the layered universe and its order; gd_builder
constructs the graph family; graph_core provides labeled graphs and the GF(2)
cut rank kernel; verify hosts the structural oracles; rankdec handles rank
decompositions including an exact solver; boundlab runs the lower-bound
machinery; cli ties them into file-based workflows.
"""

from .boundlab import (
    LowerBoundCertificate,
    check_heavy_subpath,
    check_large_color,
    check_path_components,
    check_suffix_lemma,
    extract_certificate,
    verify_lower_bound_theorem,
)
from .gd_builder import GdArtifacts, build_gd, gd_vertex_count, interval_path, path_levels
from .graph_core import (
    CenterVertex,
    Graph,
    SubdivisionVertex,
    TupleVertex,
    connected_components,
    cutrank,
    gf2_rank,
    induced_subgraph,
)
from .rankdec import (
    RankDecomposition,
    WidthReport,
    balanced_edge,
    caterpillar_decomposition,
    decomposition_width,
    edge_partition,
    exact_rankwidth,
)
from .tuple_order import (
    Interval,
    check_parity_lemmas,
    compare,
    count_flat_steps,
    enumerate_universe,
    interval_elements,
    is_proper,
    predecessor,
    successor,
)
from .verify import (
    HoleOverflowError,
    enumerate_holes,
    find_clique_cutset,
    find_diamond,
    find_even_hole,
    structural_holes,
)

__version__ = "0.1.0"

__all__ = [
    "CenterVertex",
    "GdArtifacts",
    "Graph",
    "HoleOverflowError",
    "Interval",
    "LowerBoundCertificate",
    "RankDecomposition",
    "SubdivisionVertex",
    "TupleVertex",
    "WidthReport",
    "balanced_edge",
    "build_gd",
    "caterpillar_decomposition",
    "check_heavy_subpath",
    "check_large_color",
    "check_parity_lemmas",
    "check_path_components",
    "check_suffix_lemma",
    "compare",
    "connected_components",
    "count_flat_steps",
    "cutrank",
    "decomposition_width",
    "edge_partition",
    "enumerate_holes",
    "enumerate_universe",
    "exact_rankwidth",
    "extract_certificate",
    "find_clique_cutset",
    "find_diamond",
    "find_even_hole",
    "gd_vertex_count",
    "gf2_rank",
    "induced_subgraph",
    "interval_elements",
    "interval_path",
    "is_proper",
    "path_levels",
    "predecessor",
    "structural_holes",
    "successor",
    "verify_lower_bound_theorem",
]
