"""Strong set-colorings of finite simple graphs via triple system packings."""

from .coloring import (
    Coloring,
    PackingFailure,
    PackingRealization,
    Verdict,
    color_from_packing,
    coloring_to_text,
    make_star_realization,
    parse_coloring,
    parse_realization,
    realization_to_text,
    verify_coloring,
)
from .errors import InputError, UnsupportedError
from .gf2 import (
    MAX_DIMENSION,
    ColorVector,
    check_dimension,
    subset_to_vector,
    vector_to_subset,
    xor_add,
)
from .graphs import (
    CANONICAL_VERTEX_CAP,
    Graph,
    Hypergraph,
    build_hypergraph,
    canonical_form,
    graph_to_text,
    parse_graph,
)
from .search import (
    COLORABLE,
    INCONCLUSIVE,
    NOT_COLORABLE,
    NOT_COLORABLE_SIZE,
    SearchConfig,
    SolveResult,
    dimension_for_size,
    enumerate_colorable,
    exhaustive_oracle,
    solve,
)
from .steiner import (
    PackingEmbedding,
    TripleSystem,
    check_packing_embedding,
    find_packing_embedding,
    generate_sts,
    sts_to_text,
    third_point,
    verify_pair_coverage,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_VERTEX_CAP",
    "COLORABLE",
    "ColorVector",
    "Coloring",
    "Graph",
    "Hypergraph",
    "INCONCLUSIVE",
    "InputError",
    "MAX_DIMENSION",
    "NOT_COLORABLE",
    "NOT_COLORABLE_SIZE",
    "PackingEmbedding",
    "PackingFailure",
    "PackingRealization",
    "SearchConfig",
    "SolveResult",
    "TripleSystem",
    "UnsupportedError",
    "Verdict",
    "build_hypergraph",
    "canonical_form",
    "check_dimension",
    "check_packing_embedding",
    "color_from_packing",
    "coloring_to_text",
    "dimension_for_size",
    "enumerate_colorable",
    "exhaustive_oracle",
    "find_packing_embedding",
    "generate_sts",
    "graph_to_text",
    "make_star_realization",
    "parse_coloring",
    "parse_graph",
    "parse_realization",
    "realization_to_text",
    "solve",
    "sts_to_text",
    "subset_to_vector",
    "third_point",
    "vector_to_subset",
    "verify_coloring",
    "verify_pair_coverage",
    "xor_add",
]
