"""Executable toolkit for model structures on finite categories."""

from .fincat import (
    BicompletenessReport,
    ColimitResult,
    FinCat,
    InputError,
    LimitResult,
    MissingLimitError,
    Morphism,
    ValidationReport,
    build_category,
    colimit,
    from_poset,
    is_finitely_bicomplete,
    is_iso,
    limit,
    opposite,
    validate_category,
)
from .morphclass import (
    CheckResult,
    Factorization,
    MorphClass,
    SquareLiftProblem,
    closure_check,
    enumerate_factorizations,
    find_lift,
    has_lifting,
    lifting_closure,
)
from .modelstruct import (
    AxiomReport,
    CylinderObject,
    HoCategory,
    ModelStructure,
    boundary_objects,
    find_cylinder,
    homotopy_category,
    minimal_model_structure,
    verify_model_structure,
)
from .extend import (
    CofApproxSquare,
    ExtensionCandidate,
    ExtensionKind,
    HypothesisError,
    HypothesisReport,
    MappingCylinder,
    TheoremViolationError,
    build_ll_extension,
    check_invariance,
    check_properness,
    check_thm12,
    check_thm15,
    check_thm17,
    classify_extension,
    factor_c_then_trivfib,
    lemma11_lift,
    mapping_cylinder_factorization,
    prop14_build,
)
from .quillen import (
    Adjunction,
    Functor,
    derived_fullfaithful_check,
    is_quillen_equivalence,
    is_quillen_pair,
    validate_adjunction,
)
from .census import (
    CensusResult,
    enumerate_extensions,
    enumerate_model_structures,
    extension_graph,
)
from .catio import (
    load_adjunction,
    load_category,
    load_classes,
    load_fixture,
    parse_category,
    parse_classes,
    serialize_category,
    serialize_classes,
)
