"""Exact homological algebra for finite-dimensional algebras over the rationals."""

from .algebra import (
    PRESETS,
    AlgebraError,
    AlgebraHom,
    BasedAlgebra,
    Bimodule,
    basic_algebra,
    corner,
    find_isomorphism,
    ideal_closure,
    identity_hom,
    is_ring_epimorphism,
    load_algebra,
    preset,
    quotient_algebra,
    triangular_matrix_algebra,
    trivial_extension,
)
from .complexes import (
    BoundedComplex,
    ChainMap,
    ComplexError,
    cohomology,
    cone,
    direct_sum,
    homological_cowidth,
    homological_width,
    is_null_homotopic,
    projective_normalize,
    shift,
    sup_inf,
)
from .contexts import (
    ContextError,
    ExactContext,
    check_exact_context,
    check_exact_pair,
    functor_inf_estimate,
    is_homological_epimorphism,
    milnor_context,
    nc_tensor_quotient_case,
    nc_tensor_trivial_extension_case,
    relative_end_quotient,
    report_suite,
    stratifying_recollement_data,
    verify_inequality,
)
from .extnat import ExtNat
from .homdim import (
    BOUNDS,
    Bracket,
    evaluate_bound,
    finitistic_dimension,
    global_dimension,
    is_nakayama,
    nakayama_indecomposables,
)
from .modules import (
    DEFAULT_CAP,
    Module,
    ModuleError,
    ModuleHom,
    decompose_idempotents,
    endomorphism_algebra,
    ext_dims,
    hom_space,
    injective_dimension,
    injective_module,
    is_covariant_morphism,
    minimal_resolution,
    projective_dimension,
    projective_module,
    simple_module,
    tor_dims,
)

__version__ = "0.1.0"
