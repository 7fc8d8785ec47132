"""Exact invariants and counting functions for three-strand braids.

The package works modulo the center of the braid group: elements are
represented in a free product of cyclic groups of orders two and three,
every element carries a unique normal form, and a projection map sends
normal forms to pure-braid words.  Syllable weights of those words give
exact lower and upper bounds for extremal length and entropy, and the
counting module evaluates the number of admissible tuples and words
below a threshold exactly, next to closed-form analytic bounds.
"""

from .braid import (
    BraidSyntaxError,
    BraidWord,
    CosetElement,
    HALF_TWIST,
    IDENTITY,
    NormalForm,
    braid_to_text,
    conjugate,
    embed_pure,
    evaluate,
    half_twist_word,
    normal_form,
    parse_braid,
    pure_projection,
    remultiply,
    s3_image,
    sigma_word,
    swap_generators,
    unembed,
)
from .classes import (
    FamilyWord,
    ForbiddenConjugation,
    LowerBoundReport,
    class_count,
    class_count_by_enumeration,
    enumerate_family,
    is_alternating_form,
    lower_bound_report,
    orbit_of,
    rotation_conjugator,
    search_forbidden_conjugations,
)
from .counting import (
    BoundNotApplicable,
    WordBoundChain,
    bound_tuples_j,
    bound_tuples_total,
    bound_words,
    count_tuples,
    count_tuples_j,
    count_words,
    count_words_bounded,
    max_tuple_length,
    parse_y_expression,
    threshold_from_y,
)
from .invariants import (
    BoundInterval,
    LogInteger,
    Scale,
    entropy_bounds,
    extremal_length_bounds_braid,
    extremal_length_bounds_word,
    lower_weight,
    upper_weight,
    working_precision,
)
from .words import (
    FreeWord,
    Syllable,
    SyllableDecomposition,
    WordSyntaxError,
    cyclic_reduce,
    free_conjugator,
    is_cyclically_reduced,
    is_cyclically_syllable_reduced,
    parse_word,
    syllable_decompose,
    word_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "BoundInterval",
    "BoundNotApplicable",
    "BraidSyntaxError",
    "BraidWord",
    "CosetElement",
    "FamilyWord",
    "ForbiddenConjugation",
    "FreeWord",
    "HALF_TWIST",
    "IDENTITY",
    "LogInteger",
    "LowerBoundReport",
    "NormalForm",
    "Scale",
    "Syllable",
    "SyllableDecomposition",
    "WordBoundChain",
    "WordSyntaxError",
    "bound_tuples_j",
    "bound_tuples_total",
    "bound_words",
    "braid_to_text",
    "class_count",
    "class_count_by_enumeration",
    "conjugate",
    "count_tuples",
    "count_tuples_j",
    "count_words",
    "count_words_bounded",
    "cyclic_reduce",
    "embed_pure",
    "entropy_bounds",
    "enumerate_family",
    "evaluate",
    "extremal_length_bounds_braid",
    "extremal_length_bounds_word",
    "free_conjugator",
    "half_twist_word",
    "is_alternating_form",
    "is_cyclically_reduced",
    "is_cyclically_syllable_reduced",
    "lower_bound_report",
    "lower_weight",
    "max_tuple_length",
    "normal_form",
    "orbit_of",
    "parse_braid",
    "parse_word",
    "parse_y_expression",
    "pure_projection",
    "remultiply",
    "rotation_conjugator",
    "s3_image",
    "search_forbidden_conjugations",
    "sigma_word",
    "swap_generators",
    "syllable_decompose",
    "threshold_from_y",
    "unembed",
    "upper_weight",
    "word_to_text",
    "working_precision",
]
