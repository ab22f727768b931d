"""Finite topological spaces, closed-set categories, and the equivalence
between continuity of a set function and adjointness of its induced
functors."""

from .adjunction import (
    AdjunctionVerdict,
    HomCase,
    HomCaseKind,
    classify_hom_case,
    compose_adjunctions,
    is_adjoint,
    try_left_adjoint,
    try_right_adjoint,
)
from .campaign import (
    CampaignReport,
    enumerate_functions,
    find_discontinuous_gallery,
    run_campaign,
)
from .category import (
    HomSet,
    MonotoneMap,
    check_naturality,
    compose,
    constant_functor,
    hom,
    identity_functor,
    is_functor,
)
from .continuity import (
    SetFunction,
    TheoremReport,
    check_ddag,
    forward_inclusion_lemma,
    identity_function,
    image,
    induced_direct,
    induced_inverse,
    is_continuous,
    preimage,
    proof_conditions,
    verify_theorem,
)
from .errors import TopologyError
from .topology import (
    FiniteSpace,
    Subset,
    closure,
    discrete,
    enumerate_spaces,
    from_open_family,
    generate_from_closed_subbasis,
    indiscrete,
    is_closed,
    sierpinski,
    validate_space,
)

__version__ = "0.1.0"
