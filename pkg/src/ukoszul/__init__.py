"""Universally Koszul edge rings: classification with certificates.

The edge ring of a graph is universally Koszul exactly when the graph has
no induced 2K2 and no induced P4.  This package decides that, returns a
checkable certificate either way, and cross-checks the consequences for
the minimal free resolution by computing graded Betti numbers.
"""

from .betti import (
    GF2,
    RATIONALS,
    BettiTable,
    FieldSpec,
    HomologyProfile,
    betti_table,
    froberg_check,
    is_linear_resolution,
    reduced_homology,
)
from .classify import Classification, Verdict, classification_from_dict, classify
from .corpus import Mode, canonical_form, enumerate_graphs
from .errors import (
    CapExceeded,
    EquivalenceViolation,
    IndexOutOfRange,
    InputError,
    InternalInconsistency,
    LoopEdge,
    MalformedGraph6,
    MalformedInput,
    UKoszulError,
    WrongPatternKind,
)
from .formats import emit_dot, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .graph import (
    Graph,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced,
    join,
    maximal_independent_set,
    path_graph,
    remove_isolated,
)
from .ideal import (
    EdgeIdeal,
    LinearFormPair,
    Monomial,
    ObstructionWitness,
    SimplicialComplex,
    contains_poly,
    edge_ideal,
    fiber_product,
    independence_complex,
    obstruction_from_witness,
    verify_obstruction,
)
from .recognize import (
    ChordalityCertificate,
    IsolatedExtension,
    Join,
    Leaf,
    PatternKind,
    PatternWitness,
    complement_equivalence_check,
    find_induced,
    is_2k2_p4_free,
    is_chordal,
    join_decompose,
    replay,
)
from .verify import CorpusReport, run_verification

__version__ = "0.1.0"
