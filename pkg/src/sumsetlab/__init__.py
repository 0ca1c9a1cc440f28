"""sumsetlab: exact sumset variants, direct bounds, witnesses, and searches."""

from .errors import (
    BadParams,
    CostCapExceeded,
    EmptyInput,
    FoldTooLarge,
    HypothesisViolated,
    Overflow,
    RegimeUnsupported,
    SizeCapExceeded,
    SpaceTooLarge,
    SumsetLabError,
    TooSmall,
    VariantMismatch,
    ZeroDilation,
    ZeroElement,
)
from .intset import (
    IntegerSet,
    SumsetResult,
    canonicalize,
    dilate,
    abs_set,
    subsums,
    second_smallest,
    second_largest,
    classify_structure,
    class_name,
)
from .engine import (
    SumsetVariant,
    SumsetRequest,
    compute_oracle,
    compute_dp,
    compute_batch,
    independence_number,
)
from .bounds import (
    BoundCatalogEntry,
    BoundReport,
    bound_catalogue,
    catalogue_to_json,
    check_bounds,
    extremal_set,
)
from .inverse import InverseVerdict, inverse_verdict
from .witness import (
    ALL_LEMMAS,
    WitnessChecks,
    WitnessFamily,
    WitnessPart,
    generate,
    ordering_guards_hold,
    witness_all_odd_extension,
    witness_mixed_parity_a2,
    witness_mixed_parity_a3,
    witness_odd_subsums,
    witness_parity_split,
)
from .search import SearchReport, SearchSpace, enumerate_space, minimize, partition_work

__all__ = [
    "SumsetLabError",
    "EmptyInput",
    "ZeroDilation",
    "Overflow",
    "SizeCapExceeded",
    "TooSmall",
    "FoldTooLarge",
    "CostCapExceeded",
    "ZeroElement",
    "VariantMismatch",
    "BadParams",
    "HypothesisViolated",
    "RegimeUnsupported",
    "SpaceTooLarge",
    "IntegerSet",
    "SumsetResult",
    "canonicalize",
    "dilate",
    "abs_set",
    "subsums",
    "second_smallest",
    "second_largest",
    "classify_structure",
    "class_name",
    "SumsetVariant",
    "SumsetRequest",
    "compute_oracle",
    "compute_dp",
    "compute_batch",
    "independence_number",
    "BoundCatalogEntry",
    "BoundReport",
    "bound_catalogue",
    "catalogue_to_json",
    "check_bounds",
    "extremal_set",
    "InverseVerdict",
    "inverse_verdict",
    "ALL_LEMMAS",
    "WitnessChecks",
    "WitnessFamily",
    "WitnessPart",
    "generate",
    "ordering_guards_hold",
    "witness_all_odd_extension",
    "witness_mixed_parity_a2",
    "witness_mixed_parity_a3",
    "witness_odd_subsums",
    "witness_parity_split",
    "SearchReport",
    "SearchSpace",
    "enumerate_space",
    "minimize",
    "partition_work",
]

__version__ = "0.1.0"
