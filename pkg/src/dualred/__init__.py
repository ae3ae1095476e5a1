"""Exact graded homological algebra over Q and F_p.

The engine builds relative dualizing data for graded quotient
presentations and certifies reduction identities between functors over
the doubled presentation (Ext/Tor out of the diagonal) and iterated
one-sided derived functors, by comparing graded Hilbert tables computed
two independent ways.
"""

from .algebra import (
    AlgebraMap,
    AlgebraPresentation,
    check_mutually_inverse,
    enveloping_algebra,
)
from .complexes import (
    ComplexOfModules,
    FreeComplex,
    cone,
    good_truncate_below,
    hom_into_module,
    koszul_complex,
    mat_apply,
    mat_compose,
    prune_free_complex,
    tensor_with_module,
)
from .derived import (
    HilbertTable,
    VerificationReport,
    ext_modules,
    ext_tables,
    hyper_ext_modules,
    hyper_ext_tables,
    hyper_tor_modules,
    hyper_tor_tables,
    stable_under_deepening,
    tor_modules,
    tor_tables,
)
from .dualizing import (
    DualizingComplexData,
    NonsmoothVerdict,
    ambient_dual,
    biduality_check,
    build_dualizing,
    concentrated_ambient_dual,
    derived_dual_complex,
    factorization_independence,
    finite_dual_check,
    homothety_check,
    nonsmooth_certificate,
    smooth_diagnostics,
)
from .errors import (
    CoefficientNotFinitelyGenerated,
    DualredError,
    NonHomogeneousInput,
    NotConcentrated,
    NotFiniteDimensional,
    OutsideValidityWindow,
    PresentationsNotIsomorphic,
    SessionError,
    TooLarge,
    UndefinedName,
    TwistMismatch,
)
from .field import GF, QQ, field_from_descriptor
from .hochschild import (
    bar_oracle,
    diagonal_bimodule,
    hochschild_cohomology,
    hochschild_homology,
    hom_coefficient,
    swap_factors,
    tensor_coefficient,
)
from .modules import (
    ModulePresentation,
    diagonal_module,
    free_module,
    residue_field,
)
from .groebner import ModuleGB
from .parse import parse_poly
from .poly import PolyRing
from .reduction import (
    ambient_dual_reduction,
    classical_check,
    dualizing_via_tor,
    reduce_cohomology,
    reduce_ext,
    reduce_homology,
    verify_homology_reduction,
    verify_reduction,
)
from .resolutions import (
    betti_numbers,
    free_resolution,
    is_resolution_complete,
    semifree_resolution,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraMap",
    "AlgebraPresentation",
    "CoefficientNotFinitelyGenerated",
    "ComplexOfModules",
    "DualizingComplexData",
    "DualredError",
    "FreeComplex",
    "GF",
    "HilbertTable",
    "ModuleGB",
    "ModulePresentation",
    "NonHomogeneousInput",
    "NonsmoothVerdict",
    "NotConcentrated",
    "NotFiniteDimensional",
    "OutsideValidityWindow",
    "PolyRing",
    "PresentationsNotIsomorphic",
    "QQ",
    "SessionError",
    "TooLarge",
    "TwistMismatch",
    "UndefinedName",
    "VerificationReport",
    "ambient_dual",
    "ambient_dual_reduction",
    "bar_oracle",
    "betti_numbers",
    "biduality_check",
    "build_dualizing",
    "check_mutually_inverse",
    "classical_check",
    "concentrated_ambient_dual",
    "cone",
    "derived_dual_complex",
    "diagonal_bimodule",
    "diagonal_module",
    "dualizing_via_tor",
    "enveloping_algebra",
    "ext_modules",
    "ext_tables",
    "factorization_independence",
    "field_from_descriptor",
    "finite_dual_check",
    "free_module",
    "free_resolution",
    "good_truncate_below",
    "hochschild_cohomology",
    "hochschild_homology",
    "hom_coefficient",
    "hom_into_module",
    "homothety_check",
    "hyper_ext_modules",
    "hyper_ext_tables",
    "hyper_tor_modules",
    "hyper_tor_tables",
    "is_resolution_complete",
    "koszul_complex",
    "mat_apply",
    "mat_compose",
    "nonsmooth_certificate",
    "parse_poly",
    "prune_free_complex",
    "reduce_cohomology",
    "reduce_ext",
    "reduce_homology",
    "residue_field",
    "semifree_resolution",
    "smooth_diagnostics",
    "stable_under_deepening",
    "swap_factors",
    "tensor_coefficient",
    "tensor_with_module",
    "tor_modules",
    "tor_tables",
    "verify_homology_reduction",
    "verify_reduction",
]
