"""Finite-algebra engine for set-theoretic solutions of the pentagon,
quantum Yang-Baxter and braid equations on finite semigroups."""

__version__ = "0.1.0"

from .errors import (
    AlgebraError,
    BadParams,
    CapExceeded,
    NoOneSidedIdentity,
    NotAGroup,
    NotAssociative,
    NotMonoids,
    OutOfRange,
    PreconditionFailed,
    PreconditionNotInVarietyS,
    PreconditionNotPE,
    PreconditionNotPQYBE,
    SpecTooLarge,
    UnknownFixture,
)
from .semigroup import (
    FiniteSemigroup,
    PropertyReport,
    SelfMap,
    build_inflation,
    classify,
    direct_product,
    from_table,
    idempotent_endomorphisms,
    in_variety_s,
    standard_semigroup,
)
from .solution import (
    EQUATIONS,
    PairMap,
    ThetaFamily,
    Verdict,
    assemble,
    decompose_product_form,
    power,
    transform,
    verify_equation,
)
from .conditions import (
    check_pe_conditions,
    check_pqybe_conditions,
    kernel,
    power_closed_form,
    verify_power_formula,
)
from .named import build_named_solution
from .powers import PowerProfile, power_profile, verify_power_theorem
from .constructions import (
    MatchedSystem,
    SolutionQuadruple,
    build_matched_semigroup,
    build_matched_solution,
    build_ybe_from_alpha_system,
    build_ybe_from_pentagon_quadruple,
    check_alpha_system,
    check_embeddings,
    check_matched_quadruple,
    check_matched_semigroup,
    check_monoid_quadruple,
    check_pentagon_quadruple,
    check_zappa,
)
from .enumeration import (
    EnumerationResult,
    SearchSpec,
    all_semigroups,
    brute_force_count,
    compare_with_gamma_solutions,
    enumerate_solutions,
)

__all__ = [
    "build_named_solution",
    "PowerProfile",
    "power_profile",
    "verify_power_theorem",
    "__version__",
    "AlgebraError",
    "BadParams",
    "CapExceeded",
    "NoOneSidedIdentity",
    "NotAGroup",
    "NotAssociative",
    "NotMonoids",
    "OutOfRange",
    "PreconditionFailed",
    "PreconditionNotInVarietyS",
    "PreconditionNotPE",
    "PreconditionNotPQYBE",
    "SpecTooLarge",
    "UnknownFixture",
    "FiniteSemigroup",
    "PropertyReport",
    "SelfMap",
    "build_inflation",
    "classify",
    "direct_product",
    "from_table",
    "idempotent_endomorphisms",
    "in_variety_s",
    "standard_semigroup",
    "EQUATIONS",
    "PairMap",
    "ThetaFamily",
    "Verdict",
    "assemble",
    "decompose_product_form",
    "power",
    "transform",
    "verify_equation",
    "check_pe_conditions",
    "check_pqybe_conditions",
    "kernel",
    "power_closed_form",
    "verify_power_formula",
    "MatchedSystem",
    "SolutionQuadruple",
    "build_matched_semigroup",
    "build_matched_solution",
    "build_ybe_from_alpha_system",
    "build_ybe_from_pentagon_quadruple",
    "check_alpha_system",
    "check_embeddings",
    "check_matched_quadruple",
    "check_matched_semigroup",
    "check_monoid_quadruple",
    "check_pentagon_quadruple",
    "check_zappa",
    "EnumerationResult",
    "SearchSpec",
    "all_semigroups",
    "brute_force_count",
    "compare_with_gamma_solutions",
    "enumerate_solutions",
]
