from .genus2 import (
    Classification,
    DegenerationType,
    Genus2Analysis,
    Genus2Scenario,
    build_Tf,
    classify_genus2,
)
from .good_reduction import (
    GoodReductionAnalysis,
    GoodReductionScenario,
    build_Lc,
    maximal_monodromy_certificate,
    step1_root_valuation,
    step5_root_separation,
    step_a_irreducibility,
    step_c_quotient_break,
    stepD_kummer_form,
    verify_step3_recursion,
    verify_type_iii_reduction,
)
from .presets import (
    GENUS2_EXPECTED,
    GENUS2_PRESETS,
    GOOD_REDUCTION_PRESETS,
    PRESETS,
    Q8_PROFILES,
)

__all__ = [
    "GENUS2_EXPECTED",
    "GENUS2_PRESETS",
    "GOOD_REDUCTION_PRESETS",
    "PRESETS",
    "Q8_PROFILES",
    "Classification",
    "DegenerationType",
    "Genus2Analysis",
    "Genus2Scenario",
    "GoodReductionAnalysis",
    "GoodReductionScenario",
    "build_Lc",
    "build_Tf",
    "classify_genus2",
    "maximal_monodromy_certificate",
    "step1_root_valuation",
    "step5_root_separation",
    "step_a_irreducibility",
    "step_c_quotient_break",
    "stepD_kummer_form",
    "verify_step3_recursion",
    "verify_type_iii_reduction",
]
