from .census import Census, CensusEntry, attach_series, census_chunk, cohort_census, largest_cohort
from .counting import (
    SingletonCounts,
    atomic_form_series,
    cohort_count,
    cohort_count_series,
    atom_singleton_counts,
    main_cohort_size,
    motzkin_number,
    singleton_counts,
)
from .forms import (
    AtomicForm,
    CohortKey,
    LargeForm,
    MalformedKeyError,
    canonical_atom,
    cohort_key,
    is_main_cohort,
    is_singleton_cohort,
    nonplane_code,
    parse_key,
    representative,
    serialize_key,
)
from .rewrite import Move, MoveError, apply_move, closure_classes, moves_from, neighbors

__all__ = [
    "AtomicForm",
    "Census",
    "CensusEntry",
    "CohortKey",
    "LargeForm",
    "MalformedKeyError",
    "Move",
    "MoveError",
    "SingletonCounts",
    "apply_move",
    "attach_series",
    "atomic_form_series",
    "canonical_atom",
    "census_chunk",
    "closure_classes",
    "cohort_census",
    "cohort_count",
    "cohort_count_series",
    "cohort_key",
    "is_main_cohort",
    "is_singleton_cohort",
    "largest_cohort",
    "atom_singleton_counts",
    "main_cohort_size",
    "motzkin_number",
    "moves_from",
    "neighbors",
    "nonplane_code",
    "parse_key",
    "representative",
    "serialize_key",
    "singleton_counts",
]
