"""
Finite topological spaces: construction, operators and generated algebras.
"""

from .algebras import (
    GeneratedAlgebra,
    SetFamily,
    algebra_atoms,
    bp_algebra,
    constructible_algebra,
    generate_algebra,
    nwd_ideal,
    restrict_family,
)
from .core import (
    antidiscrete_space,
    canonical_form,
    canonical_key,
    discrete_space,
    from_open_sets,
    from_preorder,
    from_subbasis,
    homeomorphism,
    is_homeomorphic,
    min_nbhd,
    relabel,
    specialization_preorder,
)
from .operators import (
    NearOpenKind,
    alpha_modification,
    boundary,
    closure,
    interior,
    is_dense,
    is_near_open,
    is_nodec,
    is_nodec_by_subsets,
    is_nwd,
    is_regular_open,
    regular_open_interior,
)
from .serialization import load_space, parse_space, space_from_dict, space_to_dict

__all__ = [
    "GeneratedAlgebra",
    "NearOpenKind",
    "SetFamily",
    "algebra_atoms",
    "alpha_modification",
    "antidiscrete_space",
    "boundary",
    "bp_algebra",
    "canonical_form",
    "canonical_key",
    "closure",
    "constructible_algebra",
    "discrete_space",
    "from_open_sets",
    "from_preorder",
    "from_subbasis",
    "generate_algebra",
    "homeomorphism",
    "interior",
    "is_dense",
    "is_homeomorphic",
    "is_near_open",
    "is_nodec",
    "is_nodec_by_subsets",
    "is_nwd",
    "is_regular_open",
    "load_space",
    "min_nbhd",
    "nwd_ideal",
    "parse_space",
    "regular_open_interior",
    "relabel",
    "restrict_family",
    "space_from_dict",
    "space_to_dict",
    "specialization_preorder",
]
