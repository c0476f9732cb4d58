"""Finite simplicial presentations with exact integer homology, horn
search, bounded fibrant approximation, twisted products over discrete
groups, characteristic classes from group cocycles, and grid verification
of the explicit plateau constructions on the triangle.
"""

__version__ = "0.1.0"

from .words import SimplexWord, apply_degeneracy, apply_face, nondegenerate, word_token
from .presentation import SimplicialMap, SimplicialSetPresentation, compose, identity_map
from .spaces import (
    boundary_delta,
    circle,
    cycle,
    delta,
    disjoint_union,
    horn,
    interval,
    klein_bottle,
    point,
    product,
    quotient_by_free_action,
    quotient_by_subcomplex,
    standard,
    torus,
)
from .snf import FGAbelianGroup, QuotientLattice, smith_normal_form, snf_with_transforms
from .chains import (
    ChainComplexZ,
    Cochain,
    chain_complex,
    chain_homotopy_check,
    coboundary,
    cohomology,
    cup_product,
    homology,
    homology_groups,
    induced_chain_map,
    is_cocycle,
    unit_cochain,
)
from .homotopy import GroupPresentation, abelianized_pi1, is_connected, pi0, pi1_presentation
from .groups import (
    ConstantSimplicialGroup,
    FiniteGroup,
    FreeAbelianGroup,
    NerveSimplicialGroup,
    cyclic,
    klein_four,
    symmetric3,
)
from .kan import (
    HornInstance,
    enumerate_horns,
    fibrant_approx_bounded,
    find_filler,
    is_kan_through,
    kan_report,
    moore_filler,
)
from .bundles import (
    PrincipalBundle,
    TwistingFunction,
    classifying_map,
    classifying_naturality,
    covering_check,
    nerve_truncated,
    principal_check,
    pullback_twisting,
    tcp_build,
    universal_check,
    universal_twisting,
    w_truncated,
    wbar_truncated,
)
from .charclass import (
    CharacteristicClass,
    GroupCochain,
    characteristic_class,
    characteristic_cochain,
    cyclic_identity_cocycle,
    naturality_check,
)
from .limits import BudgetError, DEFAULT_MAX_DIM, MAX_HORNS, MAX_SIMPLICES, max_dim
