"""Power graphs of finite groups: construction, exact vertex connectivity,
minimal separating sets, and verification of their closed-form laws."""

from pglab.connectivity import (
    CapExceededError,
    ConnectivityResult,
    SepSetReport,
    brute_force_min_sepset,
    components,
    enumerate_minimal_sepsets,
    is_minimal_separating,
    is_separating,
    local_connectivity,
    vertex_connectivity,
    vertex_connectivity_via_quotient,
)
from pglab.groups import (
    CayleyTableError,
    FiniteGroup,
    build_abelian_p,
    build_cyclic,
    cyclic_subgroup,
    element_order,
    parse_cayley_table,
)
from pglab.numtheory import Factorization, divisors, euler_phi, factorize, is_prime
from pglab.powergraph import (
    ClassPartition,
    Graph,
    NullGraphError,
    QuotientGraph,
    QuotientStructureError,
    build_power_graph,
    build_power_graph_zn_fast,
    build_proper_power_graph,
    build_reduced_graph,
    equiv_classes,
    generator_set_szn,
    neighborhood,
    quotient_graph,
    reduced_class_neighborhood,
    restrict_classes,
)
from pglab.theorems import (
    KappaFormula,
    VerificationReport,
    XiComparison,
    abelian_p_component_formula,
    card_Tk,
    compare_xi,
    construct_Tk,
    construct_nbd_sepset,
    kappa_closed_form,
    verify_paper,
    xi1,
    xi2,
)

__version__ = "0.1.0"
