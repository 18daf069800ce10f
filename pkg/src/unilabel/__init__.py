"""Induced universal graphs and adjacency labelling schemes for bounded-degree graphs."""

from .bounds import (
    BoundReport,
    count_bounded_degree_exact,
    gv_bounds_table,
    gv_lower_simple,
    gv_upper_det,
    matching_count_lower_bound,
)
from .cycles import (
    aware_size,
    build_cycle_aware,
    build_cycle_oblivious,
    embed_cycle_aware,
    embed_cycle_oblivious,
    oblivious_adjacent,
    oblivious_size,
)
from .deg2 import build_deg2_universal, embed_deg2, u_adjacent, u_successor
from .degd import (
    ProductVertex,
    RandLabel,
    RandScheme,
    build_product_universal,
    embed_degD,
    product_adjacent,
    product_label_bits,
    product_vertex_count,
    rand_decode,
    rand_encode,
    rand_label_bits,
)
from .embedding import find_induced_embedding, is_induced_embedding, is_prefix_induced
from .enumerate import enumerate_bounded_degree, enumerate_deg2_family
from .errors import (
    DegreeExceeded,
    FamilyMismatch,
    LengthOutOfRange,
    MissingContext,
    NotAcyclic,
    ParseError,
    PreconditionViolated,
    RetryExhausted,
    SchemeMismatch,
    SizeGuard,
    TargetOutOfRange,
    UnilabelError,
)
from .graph import Component, EmbeddingMap, Graph, Kind, Orientation, decompose_components
from .io import parse_graph, serialize_graph, to_dot
from .labeling import LabeledGraph, Scheme, check_obliviousness, decode, encode, scheme_label_bits
from .paths import build_path_universal, embed_acyclic, up_adjacent, up_successor
from .split import euler_split, orient_bounded_outdegree
from .subset_sum import subset_sum_greedy
from .verify import VerificationReport, cross_check_oracle, verify_prefix_monotone, verify_universality

__version__ = "0.1.0"
