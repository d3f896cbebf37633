"""Anti-collusion fingerprinting codes.

Construction, verification, averaging-attack simulation, and colluder
tracing for frameproof, separable, and strongly separable codes.
"""

from .codes import (
    Code,
    CodeFormatError,
    FeasibleSet,
    Symbol,
    Word,
    desc_contains,
    desc_intersect_code,
    descendant,
    format_code_text,
    format_feasible_line,
    hamming,
    parse_code_text,
    parse_feasible_line,
    read_code_file,
    shortened,
    write_code_file,
)
from .construct import (
    ConstructionPlan,
    build_length3,
    one_hot_compose,
    optimal_s,
    predicted_size,
)
from .simulate import (
    DetectionStatistics,
    EmbeddingContext,
    averaging_attack,
    correlate,
    embed,
    make_context,
    threshold,
)
from .trace import TraceReport, coalition_feasible_set, lacc_identify, ssc_trace
from .verify import (
    AmbiguityWitness,
    CollisionWitness,
    ForbiddenPatternWitness,
    FramingWitness,
    OverlapWitness,
    Verdict,
    desc_cap_bound,
    forbidden_type_scan,
    is_fpc,
    is_sc,
    is_ssc,
    is_ssc_naive,
    shortened_sc_check,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguityWitness",
    "Code",
    "CodeFormatError",
    "CollisionWitness",
    "ConstructionPlan",
    "DetectionStatistics",
    "EmbeddingContext",
    "FeasibleSet",
    "ForbiddenPatternWitness",
    "FramingWitness",
    "OverlapWitness",
    "Symbol",
    "TraceReport",
    "Verdict",
    "Word",
    "averaging_attack",
    "build_length3",
    "coalition_feasible_set",
    "correlate",
    "desc_cap_bound",
    "desc_contains",
    "desc_intersect_code",
    "descendant",
    "embed",
    "forbidden_type_scan",
    "format_code_text",
    "format_feasible_line",
    "hamming",
    "is_fpc",
    "is_sc",
    "is_ssc",
    "is_ssc_naive",
    "lacc_identify",
    "make_context",
    "one_hot_compose",
    "optimal_s",
    "parse_code_text",
    "parse_feasible_line",
    "predicted_size",
    "read_code_file",
    "shortened",
    "shortened_sc_check",
    "ssc_trace",
    "threshold",
    "write_code_file",
]
