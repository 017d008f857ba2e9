"""singforms: exact torsion/cotorsion of differential forms on
hypersurface singularities and cyclic quotient singularity combinatorics."""

from .errors import (
    BudgetExceededError,
    HomogeneityError,
    NonReducedError,
    ParseError,
    QuasiReflectionError,
    SingFormsError,
    UnknownVariableError,
)
from .groebner import Ideal, groebner_basis, ideal_dimension, jacobian_ideal
from .hypersurface import (
    FreenessVerdict,
    SingularityReport,
    TheoremCheck,
    analyze_hypersurface,
    corank_profile,
    embedding_dimension,
    is_reduced,
    normality_check,
    singular_locus_codim,
)
from .koszul import (
    CohomologyModule,
    KoszulComplex,
    TorsionOracleReport,
    VanishingPattern,
    build_koszul,
    kahler_presentation,
    koszul_cohomology,
    reflexive_presentation,
    tjurina_dimension,
    torsion_oracle,
    vanishing_pattern,
)
from .matrices import det_fraction_free, exterior_power_matrix, matrix_rank_over_quotient
from .modules import (
    FreeModuleElement,
    ModuleGroebnerBasis,
    ModulePresentation,
    ambient_presentation,
    graded_dimensions,
    minimal_generators,
    module_groebner,
    module_intersection,
    module_kernel,
    module_saturation,
    module_syzygies,
    total_dimension,
    unit_vector,
)
from .orders import GREVLEX, LEX, MonomialOrder
from .poly import Polynomial, Ring, parse_poly
from .quotient import (
    ClassifiedType,
    InvariantFormBasis,
    QuotientType,
    SemigroupFiber,
    canonical_type,
    classify_dimension,
    classify_dimension_exhaustive,
    fiber_least_element,
    fiber_minimal_elements,
    gorenstein_check,
    invariant_form_generators,
    is_isolated,
    reflexive_freeness,
    reid_tai_terminal,
    validate_type,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ClassifiedType",
    "CohomologyModule",
    "FreeModuleElement",
    "FreenessVerdict",
    "GREVLEX",
    "HomogeneityError",
    "Ideal",
    "InvariantFormBasis",
    "KoszulComplex",
    "LEX",
    "ModuleGroebnerBasis",
    "ModulePresentation",
    "MonomialOrder",
    "NonReducedError",
    "ParseError",
    "Polynomial",
    "QuasiReflectionError",
    "QuotientType",
    "Ring",
    "SemigroupFiber",
    "SingFormsError",
    "SingularityReport",
    "TheoremCheck",
    "TorsionOracleReport",
    "UnknownVariableError",
    "VanishingPattern",
    "ambient_presentation",
    "analyze_hypersurface",
    "build_koszul",
    "canonical_type",
    "classify_dimension",
    "classify_dimension_exhaustive",
    "corank_profile",
    "det_fraction_free",
    "embedding_dimension",
    "exterior_power_matrix",
    "fiber_least_element",
    "fiber_minimal_elements",
    "gorenstein_check",
    "graded_dimensions",
    "groebner_basis",
    "ideal_dimension",
    "invariant_form_generators",
    "is_isolated",
    "is_reduced",
    "jacobian_ideal",
    "kahler_presentation",
    "koszul_cohomology",
    "matrix_rank_over_quotient",
    "minimal_generators",
    "module_groebner",
    "module_intersection",
    "module_kernel",
    "module_saturation",
    "module_syzygies",
    "normality_check",
    "parse_poly",
    "reflexive_freeness",
    "reflexive_presentation",
    "reid_tai_terminal",
    "singular_locus_codim",
    "tjurina_dimension",
    "torsion_oracle",
    "total_dimension",
    "unit_vector",
    "validate_type",
    "vanishing_pattern",
]
