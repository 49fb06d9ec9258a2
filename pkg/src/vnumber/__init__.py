"""vnumber: a field-free symbolic toolkit for monomial ideals.

Everything is exponent arithmetic over an ordered variable context:
ideal operations, irreducible decompositions and associated primes,
v-numbers and v-functions of powers, polarization, linear-quotients
certificates and searches, and combinatorial constructors (edge ideals,
polymatroidal ideals, Hibi ideals of posets).
"""

from .combi import (
    Graph,
    PEO,
    Poset,
    complement,
    colon_polymatroidal_check,
    dual_exchange_holds,
    edge_ideal,
    find_peo,
    froberg_linear_resolution,
    graphic_matroid,
    has_long_induced_cycle,
    hibi_expected_ass,
    hibi_ideal,
    hibi_power_polarization_check,
    hibi_symbolic_intersection_check,
    hibi_v_expected,
    is_polymatroidal,
    neighborhood_colon_check,
    poset_classes,
    poset_classes_upto,
    poset_ideals,
    poset_power,
    projective_plane_ideal,
    transversal,
    veronese_squarefree,
    veronese_type,
)
from .core import (
    EXPONENT_LIMIT,
    IdealStats,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    colon_ideal,
    colon_monomial,
    contains,
    intersect,
    minimalize,
    multiply,
    power,
    stats,
)
from .decomp import (
    AssPowers,
    AssSet,
    IrreducibleComponent,
    ass_from_decomposition,
    ass_oracle,
    ass_powers,
    associated_primes,
    has_depth_zero,
    irreducible_decomposition,
)
from .kernels import BACKEND
from .lq import (
    ExtensionCertificate,
    ExtensionSearch,
    LQCheck,
    LQOrder,
    LQSearch,
    extend_by_lq,
    find_lq_order,
    is_lq_order,
    linear_powers_certificate,
    lq_polarization_transfer,
    simon_search,
)
from .polar import Polarization, polarize, specialize, verify_polarization_theorem
from .vnum import (
    BoundSample,
    PrimeV,
    TailLaw,
    VPowerRow,
    VReport,
    VWitness,
    check_bounds,
    colon_module_gens,
    v_at_prime,
    v_function,
    v_number,
    v_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EXPONENT_LIMIT",
    "AssPowers",
    "AssSet",
    "BoundSample",
    "ExtensionCertificate",
    "ExtensionSearch",
    "Graph",
    "IdealStats",
    "IrreducibleComponent",
    "LQCheck",
    "LQOrder",
    "LQSearch",
    "Monomial",
    "MonomialIdeal",
    "MonomialPrime",
    "PEO",
    "Polarization",
    "Poset",
    "PrimeV",
    "TailLaw",
    "VPowerRow",
    "VReport",
    "VWitness",
    "VarContext",
    "ass_from_decomposition",
    "ass_oracle",
    "ass_powers",
    "associated_primes",
    "check_bounds",
    "colon_ideal",
    "colon_module_gens",
    "colon_monomial",
    "colon_polymatroidal_check",
    "complement",
    "contains",
    "dual_exchange_holds",
    "edge_ideal",
    "extend_by_lq",
    "find_lq_order",
    "find_peo",
    "froberg_linear_resolution",
    "graphic_matroid",
    "has_depth_zero",
    "has_long_induced_cycle",
    "hibi_expected_ass",
    "hibi_ideal",
    "hibi_power_polarization_check",
    "hibi_symbolic_intersection_check",
    "hibi_v_expected",
    "intersect",
    "irreducible_decomposition",
    "is_lq_order",
    "is_polymatroidal",
    "linear_powers_certificate",
    "lq_polarization_transfer",
    "minimalize",
    "multiply",
    "neighborhood_colon_check",
    "polarize",
    "poset_classes",
    "poset_classes_upto",
    "poset_ideals",
    "poset_power",
    "power",
    "projective_plane_ideal",
    "simon_search",
    "specialize",
    "stats",
    "transversal",
    "v_at_prime",
    "v_function",
    "v_number",
    "v_oracle",
    "verify_polarization_theorem",
    "veronese_squarefree",
    "veronese_type",
    "__version__",
]
