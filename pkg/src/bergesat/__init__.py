"""Enumeration and certification of Berge-clique-saturated uniform hypergraphs."""

from .berge import (
    BergeWitness,
    PairClassification,
    brute_force_find_berge,
    brute_force_is_saturated,
    classify_pair,
    fast_bad_filters,
    find_berge_clique,
    is_berge_free,
    is_saturated,
    validate_pair_witness,
    validate_witness,
)
from .canon import are_isomorphic, brute_force_canonical_form, canonical_form, canonical_hypergraph, dedup
from .constructions import (
    attach_gadgets,
    construction_even,
    construction_odd,
    extremal_family,
    gadget_addable,
    tight_cycle,
)
from .errors import (
    BadArity,
    BadLength,
    BadParity,
    BergesatError,
    DuplicateEdge,
    EqualVertices,
    InvalidSpec,
    ParseError,
    TooLarge,
    UnsupportedParameters,
    VertexOutOfRange,
)
from .hypergraph import (
    Hypergraph,
    add_edge,
    degree,
    format_line,
    incidence_graph,
    neighborhood,
    new_hypergraph,
    pair_degree,
    pair_neighborhood,
    parse_line,
)
from .matching import BipartiteAux, Matching, build_pair_edge_aux, max_matching
from .search import SearchReport, SearchSpec, enumerate_hypergraphs, find_saturated, saturation_number

__version__ = "0.1.0"

__all__ = [
    "BadArity",
    "BadLength",
    "BadParity",
    "BergeWitness",
    "BergesatError",
    "BipartiteAux",
    "DuplicateEdge",
    "EqualVertices",
    "Hypergraph",
    "InvalidSpec",
    "Matching",
    "PairClassification",
    "ParseError",
    "SearchReport",
    "SearchSpec",
    "TooLarge",
    "UnsupportedParameters",
    "VertexOutOfRange",
    "add_edge",
    "are_isomorphic",
    "attach_gadgets",
    "brute_force_canonical_form",
    "brute_force_find_berge",
    "brute_force_is_saturated",
    "build_pair_edge_aux",
    "canonical_form",
    "canonical_hypergraph",
    "classify_pair",
    "construction_even",
    "construction_odd",
    "dedup",
    "degree",
    "enumerate_hypergraphs",
    "extremal_family",
    "fast_bad_filters",
    "find_berge_clique",
    "find_saturated",
    "format_line",
    "gadget_addable",
    "incidence_graph",
    "is_berge_free",
    "is_saturated",
    "max_matching",
    "neighborhood",
    "new_hypergraph",
    "pair_degree",
    "pair_neighborhood",
    "parse_line",
    "saturation_number",
    "tight_cycle",
    "validate_pair_witness",
    "validate_witness",
]
