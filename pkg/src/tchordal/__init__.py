"""t-chordal digraphs: exact dicoloring, induced-cycle search, the amplifier
construction, and the 3-SAT reduction for t-chordality recognition."""

__version__ = "0.1.0"

from .amplifier import (
    AmplifierOutput,
    IndependentSetFamily,
    amplify,
    build_hard_sequence,
    intersection_graph,
    proper_coloring,
    verify_amplifier_postcondition,
)
from .chordality import (
    InducedCycle,
    InducedPath,
    class_cl_violation,
    enumerate_induced_dicycles,
    find_induced_dipath,
    in_class_cl,
    is_t_chordal,
    t_chordality_witness,
)
from .dicoloring import (
    Dicoloring,
    dichromatic_number,
    enumerate_k_dicolorings,
    is_k_dicolorable,
    verify_dicoloring,
)
from .digraph import (
    Digraph,
    Embedding,
    UndirectedGraph,
    disjoint_union,
    induced_subdigraph,
    new_digraph,
    strongly_connected_components,
    underlying_clique_number,
)
from .reduction import (
    CnfFormula,
    ReductionArtifact,
    assignment_to_cycle,
    build_reduction,
    cycle_to_assignment,
    parse_dimacs_cnf,
    sat_brute_force,
    verify_reduction,
)
