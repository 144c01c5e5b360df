"""Exact-arithmetic toolkit for generalized Fermat varieties over finite fields."""

from .arrangement import (
    Arrangement,
    LambdaParams,
    ProjectivePoint,
    ProjectiveMap,
    is_general_position,
    lambda_to_arrangement,
    membership_Xnd,
    normalize,
    pgl_equivalent,
    point,
)
from .autgroup import (
    LinGroup,
    MonomialMatrix,
    UniquenessReport,
    arrangement_symmetries,
    compute_lin,
    eigenspace_profile,
    preserves_ideal,
    quasi_reflection_census,
    subgroup_oracle,
    verify_unique_fermat_group,
)
from .ff import (
    FieldElement,
    FieldSpec,
    embed,
    field_with_kth_roots,
    kth_roots_of,
    make_field,
    primitive_kth_root,
)
from .moduli import FrobeniusPower, field_of_moduli, frobenius_apply
from .multinomial import (
    PAdicExpansion,
    binom_mod_p_oracle,
    binom_nonzero_mod_p,
    is_power_of_p,
    lucas_witness,
    multinomial_nonzero_mod_p,
    p_adic_digits,
)
from .variety import (
    FermatModel,
    TypeVerdict,
    build_model,
    classify_type,
    contains,
    covering_map,
    deck_generators,
    enumerate_points,
    induced_pair,
    jacobian_rank,
    smoothness_report,
)

__version__ = "0.1.0"
