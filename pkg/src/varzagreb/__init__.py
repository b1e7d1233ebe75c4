"""varzagreb: variable Zagreb indices, sharp lower bounds, and exhaustive certification.

Library layout:
  graphs   -- simple graph type, degree sequences, canonical forms, graph6
  indices  -- vertex/edge/multiplicative index rules, catalog, transforms
  families -- extremal family constructors (G, H, K, K1, K2, L)
  bounds   -- closed-form lower bounds keyed to min/max degree
  oracle   -- exhaustive enumeration and verification reports
  cli      -- compute / family / bound / verify / sweep subcommands
"""

from .graphs import (
    Graph,
    DegreeProfile,
    GraphError,
    Graph6ParseError,
    canonical_form,
    complete_graph,
    cycle_complement,
    cycle_graph,
    degree_profile,
    format_edge_list,
    is_graphical,
    parse_edge_list,
    parse_graph6,
    path_graph,
    realize_degree_sequence,
    to_graph6,
)
from .indices import (
    DomainError,
    EdgeIndexSpec,
    VertexIndexSpec,
    catalog,
    classify_monotonicity,
    eval_edge_index,
    eval_vertex_index,
    parse_index_spec,
    vertex_to_edge_transform,
)
from .families import (
    FamilyGraph,
    FamilyId,
    build_family,
    build_G,
    build_H,
    build_K,
    build_K1,
    build_K2,
    build_L,
    family_J_value,
    is_member,
    parse_family_id,
)
from .bounds import (
    BoundResult,
    HypothesisError,
    edge_lower_bound,
    lower_bound_nondecreasing,
    lower_bound_nonincreasing,
    m1_alpha_lower_bound,
    minimal_vertex_window,
    multiplicative_lower_bound,
)
from .oracle import (
    BudgetError,
    ClassSpec,
    VerificationReport,
    enumerate_graphs,
    min_index_over_class,
    verify_bound,
    verify_edge_bound,
    verify_uniqueness,
)

__version__ = "0.1.0"
