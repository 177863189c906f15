"""Exact Lie-theoretic character engine with a numeric verification
layer: root data with a compactness grading, Weyl groups, exact
character arithmetic with two independent constructions, discrete
series character values on the torus, spin module and induction
checks, a holomorphic fixed point index, and SU(1,1) quadrature
closures for matrix coefficients, formal degrees, orbital integrals
and Gaussian envelope certificates.
"""

from .characters import (
    Char,
    TorusElement,
    alternating_sum,
    char_act,
    char_add,
    char_mul,
    char_neg,
    char_scale,
    char_sub,
    decompose,
    denominator_product,
    dimension,
    dimension_of,
    evaluate,
    exact_divide,
    exp_at,
    freudenthal_character,
    is_regular,
    leading_term,
    monomial,
    torus_act,
    weyl_character,
    weyl_denominator,
)
from .discrete_series import (
    HCParameter,
    compact_reduction_value,
    denominator_value,
    ds_character_value,
    lowest_k_type,
    make_hc_parameter,
)
from .errors import (
    ComputationError,
    InputError,
    InvalidNoncompactSet,
    LieCharError,
    NonDominantLeadingTerm,
    NotConverged,
    NotDiscreteSeries,
    NotDivisible,
    NotDominant,
    NotDominantForK,
    NotFiniteType,
    NotIntegral,
    NotInvariant,
    NotRegular,
    RankMismatch,
    SingularElement,
)
from .fixed_point import (
    AssemblyReport,
    cleared_term_identity_holds,
    compact_assembly_check,
    fixed_point_index,
    index_identity_deviation,
    lefschetz_local_term,
)
from .roots import (
    RootDatum,
    Weight,
    WeylElement,
    build_root_datum,
    catalog_datum,
    datum_from_text,
    dominant_representative,
    is_dominant,
    is_strictly_dominant,
    longest_element,
    pair_coroot,
    pairing,
    reflection_element,
    weyl_act,
    weyl_group,
)
from .spin import (
    DiracInductionReport,
    GradedCharacter,
    SpinLemmaReport,
    dirac_induction_ktype_check,
    exterior_p,
    spin_alternating_identity_holds,
    spin_module,
    verify_spin_exterior_lemma,
)
from .su11 import (
    DIAM_K,
    FgoiReport,
    GroupElementSU11,
    QuadratureGrid,
    fgoi_envelope_check,
    formal_degree,
    formal_degree_report,
    kak_radial,
    matrix_coefficient,
    matrix_coefficient_quadrature,
    orbital_integral_character,
    orbital_report,
)
from .verify import CheckResult, run_catalog_suite

__version__ = "0.1.0"
