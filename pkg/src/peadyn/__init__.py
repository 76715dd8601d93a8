"""Counting dynamics on base-k words.

The step map reads a word and says what it sees, largest letter first: the
count of each letter present, written as a base-k numeral, followed by the
letter itself. This package iterates that map, detects the fixed point or
cycle every orbit falls into, and enumerates all of them per base.
"""

from .core import (
    MAX_BASE,
    MIN_BASE,
    Block,
    Description,
    Word,
    count_letters,
    decode_numeral,
    describe,
    digit_length,
    encode_numeral,
    format_word,
    parse_word,
    render,
    step,
)
from .dynamics import (
    DEFAULT_MAX_STEPS,
    BoundInfo,
    OrbitLimitExceeded,
    OrbitResult,
    eventual_length_ok,
    length_bound,
    orbit,
)
from .search import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    ClassificationReport,
    CycleRecord,
    brute_force_classify,
    canonical_cycle,
    classify,
    cycle_inequality_holds,
    enumerate_cycles,
    cycle_sort_key,
    enumerate_fixed_points,
    fixed_point_inequality_holds,
    verify_base2_convergence,
    word_sort_key,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_BASE",
    "MIN_BASE",
    "DEFAULT_MAX_STEPS",
    "DEFAULT_BUDGET",
    "Block",
    "BoundInfo",
    "BudgetExceeded",
    "ClassificationReport",
    "CycleRecord",
    "Description",
    "OrbitLimitExceeded",
    "OrbitResult",
    "Word",
    "brute_force_classify",
    "canonical_cycle",
    "classify",
    "count_letters",
    "cycle_inequality_holds",
    "cycle_sort_key",
    "decode_numeral",
    "describe",
    "digit_length",
    "encode_numeral",
    "enumerate_cycles",
    "enumerate_fixed_points",
    "eventual_length_ok",
    "fixed_point_inequality_holds",
    "format_word",
    "length_bound",
    "orbit",
    "parse_word",
    "render",
    "step",
    "verify_base2_convergence",
    "word_sort_key",
]
