"""Fibonacci word on an infinite alphabet: generation, exact counts, oracles."""

from .analysis import (
    CensusReport,
    FactorOccurrence,
    LyndonArray,
    RunOccurrence,
    SquareOccurrence,
    count_letter,
    is_lyndon,
    lyndon_array_bruteforce,
    lyndon_census,
    lyndon_factor_census,
    palindrome_census,
    run_census,
    square_census,
    straddling_square_census,
)
from .exceptions import (
    ArithmeticOverflowError,
    CapExceededError,
    DomainError,
    InexactDivisionError,
    ZWWError,
)
from .formulas import (
    distinct_palindromes,
    distinct_square_count,
    fib_word_distinct_squares,
    fib_word_total_squares,
    is_zww_lyndon,
    letter_count,
    letter_sum,
    lyndon_count,
    new_squares,
    palindrome_inventory,
    straddling_square_count,
    total_palindromes,
    total_squares,
)
from .lyndon_array import algorithm_la, ell_to_lambda, la_iterations, two_positions_full_extent_check
from .words import (
    Factorization,
    Word,
    apply_phi,
    fib,
    fibonacci_word,
    lucas,
    parity_factorization,
    prefix_factorization,
    reduce_mod2,
    shift_add,
    suffix_block,
    suffix_factorization,
    zww,
    zww_by_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticOverflowError",
    "CapExceededError",
    "CensusReport",
    "DomainError",
    "FactorOccurrence",
    "Factorization",
    "InexactDivisionError",
    "LyndonArray",
    "RunOccurrence",
    "SquareOccurrence",
    "Word",
    "ZWWError",
    "algorithm_la",
    "apply_phi",
    "count_letter",
    "distinct_palindromes",
    "distinct_square_count",
    "ell_to_lambda",
    "fib",
    "fib_word_distinct_squares",
    "fib_word_total_squares",
    "fibonacci_word",
    "is_lyndon",
    "is_zww_lyndon",
    "la_iterations",
    "letter_count",
    "letter_sum",
    "lucas",
    "lyndon_array_bruteforce",
    "lyndon_census",
    "lyndon_count",
    "lyndon_factor_census",
    "new_squares",
    "palindrome_census",
    "palindrome_inventory",
    "parity_factorization",
    "prefix_factorization",
    "reduce_mod2",
    "run_census",
    "shift_add",
    "square_census",
    "straddling_square_census",
    "straddling_square_count",
    "suffix_block",
    "suffix_factorization",
    "total_palindromes",
    "total_squares",
    "two_positions_full_extent_check",
    "zww",
    "zww_by_morphism",
]
