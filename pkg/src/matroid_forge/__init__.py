"""matroid-forge: a desk-scale workbench for matroid truncation calculus."""

from .core import (
    ExplicitMatroid,
    FiniteMatroid,
    GraphicMatroid,
    LinearMatroid,
    MinorMatroid,
    OracleMatroid,
    UniformMatroid,
    Verdict,
    check_base_axioms,
    max_independent_extension,
)
from .equivalence import (
    UNKNOWN,
    ClassLabel,
    almost_spans,
    classify_class,
    find_comparable_pair,
    relative_rank_difference_check,
    strongly_equivalent,
)
from .errors import (
    BoundError,
    ClaimError,
    DependenceError,
    FamilyError,
    GroundError,
    MatroidForgeError,
    ParseError,
    SchemaError,
    SpecError,
    TaskError,
)
from .finitary import (
    INFINITE,
    FinitaryMatroid,
    FreeMatroid,
    PeriodicSumMatroid,
    relative_rank_template,
    removal_witness,
)
from .forcing import (
    ClaimResult,
    Condition,
    StepCertificate,
    Task,
    check_claim_preconditions,
    dense_extend_gain,
    dense_extend_guard,
    forcing_step,
    make_task,
    seed_family,
    verify_certificate,
)
from .gentrunc import (
    FinitaryFamilyVerdict,
    TruncationFamily,
    enumerate_gen_truncations,
    enumerate_raw,
    verify_family,
    verify_family_finitary,
    verify_is_gen_truncation,
)
from .templates import TemplateSet
from .truncation import TruncationLevel, apply_level, classify_truncation, cotruncate, truncate_to

__version__ = "0.1.0"

__all__ = [
    "BoundError",
    "ClaimError",
    "ClaimResult",
    "ClassLabel",
    "Condition",
    "DependenceError",
    "ExplicitMatroid",
    "FamilyError",
    "FinitaryFamilyVerdict",
    "FinitaryMatroid",
    "FiniteMatroid",
    "FreeMatroid",
    "GraphicMatroid",
    "GroundError",
    "INFINITE",
    "LinearMatroid",
    "MatroidForgeError",
    "MinorMatroid",
    "OracleMatroid",
    "ParseError",
    "PeriodicSumMatroid",
    "SchemaError",
    "SpecError",
    "StepCertificate",
    "Task",
    "TaskError",
    "TemplateSet",
    "TruncationFamily",
    "TruncationLevel",
    "UNKNOWN",
    "UniformMatroid",
    "Verdict",
    "almost_spans",
    "apply_level",
    "check_base_axioms",
    "check_claim_preconditions",
    "classify_class",
    "classify_truncation",
    "cotruncate",
    "dense_extend_gain",
    "dense_extend_guard",
    "enumerate_gen_truncations",
    "enumerate_raw",
    "find_comparable_pair",
    "forcing_step",
    "make_task",
    "max_independent_extension",
    "relative_rank_difference_check",
    "relative_rank_template",
    "removal_witness",
    "seed_family",
    "strongly_equivalent",
    "truncate_to",
    "verify_certificate",
    "verify_family",
    "verify_family_finitary",
    "verify_is_gen_truncation",
]
