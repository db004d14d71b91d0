"""Exact total domination and Grundy total domination toolkit.

Bitset graphs, exact solvers for both domination numbers, total
k-uniformity decisions, the classical family constructions, brute-force
oracles, and graph6 tooling.  Hot search loops run on a compiled kernel
when the extension is built (``HAVE_COMPILED``) and on a pure-Python twin
otherwise.
"""

from .bitset import bits, vset
from .domination import (
    DominationReport,
    domination_report,
    even_length_tds,
    exists_tds_of_length,
    extend_to_total_dominating_sequence,
    grundy_total_domination_number,
    is_dominating_set,
    is_legal_sequence,
    is_total_dominating_sequence,
    is_total_dominating_set,
    open_uniformity_lengths,
    total_domination_number,
)
from .families import (
    bipartite_double_cover,
    complete_graph,
    complete_multipartite,
    crown,
    cycle,
    direct_product,
    disjoint_union,
    line_graph,
    line_of_complete,
    path,
    star,
)
from .formats import decode_graph6, encode_graph6, read_edge_list, write_dot, write_edge_list
from .graph import (
    Graph,
    collapse_false_twins,
    connected_components,
    false_twin_partition,
    girth,
    has_induced_c5_or_c6,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    is_complete_multipartite,
    is_connected,
    is_false_twin_free,
    is_regular,
    isolated_vertices,
    perfect_elimination_ordering,
    remove_vertices,
)
from .kernels import HAVE_COMPILED
from .uniformity import (
    GirthBranch,
    UniformityVerdict,
    chordal_uniform_classification,
    double_cover_uniformity,
    g_k_membership,
    girth_dichotomy,
    reduction,
    regularity_theorem_check,
    total_uniformity,
)

__version__ = "0.1.0"
