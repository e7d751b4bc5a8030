"""Closed-form counts for ZWW and Fibonacci words, in exact integer arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .analysis import is_lyndon
from .exceptions import ArithmeticOverflowError, DomainError, InexactDivisionError
from .words import INT64_MAX, Word, fib, lucas, shift_add, suffix_block, zww

# first n for which 2(f_n - 1) matches a direct count on F_n
FIB_DISTINCT_SQUARES_MIN_N = 4
FIB_TOTAL_SQUARES_MIN_N = 3


def _checked(value: int, what: str) -> int:
    if value > INT64_MAX:
        raise ArithmeticOverflowError(f"{what} = {value} does not fit in 64 bits")
    return value


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"{what}: {num} is not divisible by {den}")
    return q


def binom(x: int, y: int) -> int:
    """Binomial coefficient that vanishes when ``y > x``, ``x < 0`` or ``y < 0``."""
    if y > x or x < 0 or y < 0:
        return 0
    return _checked(math.comb(x, y), f"C({x},{y})")


def letter_count(i: int, n: int) -> int:
    """Occurrences of letter ``n`` in ``W_i``."""
    if i < 0 or n < 0:
        raise DomainError("letter_count needs i >= 0 and n >= 0")
    h = n // 2
    return binom(i - n + h, h)


def total_palindromes(i: int) -> int:
    """Palindromic factor occurrences in ``W_i``, single letters included."""
    if i < 0:
        raise DomainError("word index must be >= 0")
    if i <= 3:
        return (1, 2, 3, 6)[i]
    return fib(i + 3) - 2 * fib(i - 2)


def distinct_palindromes(i: int) -> int:
    if i < 0:
        raise DomainError("word index must be >= 0")
    if i <= 2:
        return i + 1
    return 5 * i // 2 - 2


@dataclass(frozen=True)
class PalindromeInventory:
    singles: tuple[Word, ...]
    doubles: tuple[Word, ...]
    triples: tuple[Word, ...]

    def members(self) -> set[Word]:
        return set(self.singles) | set(self.doubles) | set(self.triples)

    def __len__(self) -> int:
        return len(self.singles) + len(self.doubles) + len(self.triples)


def palindrome_inventory(i: int) -> PalindromeInventory:
    """Every distinct palindrome of ``W_i``: letters, ``(2j)(2j)``, and shifted ``232``/``323``."""
    if i < 0:
        raise DomainError("word index must be >= 0")
    singles = tuple(Word([c]) for c in range(i + 1))
    doubles = tuple(Word([2 * j, 2 * j]) for j in range(1, i + 1) if 2 * j + 1 <= i)
    triples = tuple(
        shift_add(2 * j, Word(t))
        for j in range(i + 1)
        if 2 * j + 4 <= i
        for t in ((2, 3, 2), (3, 2, 3))
    )
    return PalindromeInventory(singles, doubles, triples)


def distinct_square_count(m: int) -> int:
    """Distinct squares in ``W_m``; ``floor(k/2) * ceil(k/2)`` with ``k = m - 1``."""
    if m < 1:
        raise DomainError("distinct_square_count needs m >= 1")
    k = m - 1
    return (k // 2) * ((k + 1) // 2)


@dataclass(frozen=True)
class SquareInventory:
    new_periods: tuple[int, ...]
    new_squares: tuple[Word, ...]

    @property
    def distinct_count(self) -> int:
        return len(self.new_squares)


def new_squares(k: int, *, max_length: int | None = None) -> SquareInventory:
    """Squares present in ``W_{k+1}`` but not in ``W_k``: ``S_{k,k-2i}^2`` for ``i = 1..floor(k/2)``."""
    if k < 0:
        raise DomainError("word index must be >= 0")
    zww(k + 1, max_length=max_length)  # cap check on the host word
    halves = [suffix_block(k, k - 2 * i, max_length=max_length) for i in range(1, k // 2 + 1)]
    periods = tuple(fib(k - 2 * i + 2) for i in range(1, k // 2 + 1))
    return SquareInventory(periods, tuple(h + h for h in halves))


def total_squares(i: int) -> int:
    """Square occurrences in ``W_i``: ``f_i - 1``."""
    if i < 1:
        raise DomainError("total_squares needs i >= 1")
    return fib(i) - 1


def straddling_square_count(i: int) -> int:
    """Squares of ``W_i`` crossing the ``W_{i-1} | 2 (+) W_{i-2}`` boundary."""
    if i < 2:
        raise DomainError("straddling_square_count needs i >= 2")
    return 0 if i < 3 else 1


def straddling_square_witness(i: int) -> tuple[int, Word]:
    """1-based start and content of the unique straddling square, ``i >= 3``."""
    if i < 3:
        raise DomainError("no straddling square below i = 3")
    half = shift_add(2, zww(i - 3))
    return fib(i) + 1, half + half


def _lyndon_two(n: int) -> int:
    # distinct Lyndon factors beginning with 2 in W_n, n >= 2
    total = 0
    for j in range(n - 1):
        inner = sum(fib(i + 2) for i in range(j, n - 1))
        total += inner - (n - 2 - j) * fib(j + 2) - fib(j + 1)
    return total + 1


def lyndon_count(n: int, c: int) -> int:
    """Distinct Lyndon factors of ``W_n`` that begin with letter ``c``."""
    if n < 0 or c < 0:
        raise DomainError("lyndon_count needs n >= 0 and c >= 0")
    if c == 0:
        return fib(n + 2)
    if n < c:
        return 0
    if c % 2:
        return fib(n + 3 - c) - 1
    if c == 2:
        return _lyndon_two(n)
    return lyndon_count(n - (c - 2), 2)


def is_zww_lyndon(n: int, *, max_length: int | None = None) -> bool:
    return is_lyndon(zww(n, max_length=max_length))


def letter_sum(k: int) -> int:
    """Sum of the letters of ``W_k``.

    The irrational closed form collapses, via ``gamma * psi = -1`` and
    ``gamma + psi = 1``, to ``(2k L_{k+1} - f_k) / 5``.
    """
    if not 1 <= k <= 86:
        raise DomainError("letter_sum needs 1 <= k <= 86")
    value = _exact_div(2 * k * lucas(k + 1) - fib(k), 5, f"letter_sum({k})")
    return _checked(value, f"letter_sum({k})")


def fib_word_distinct_squares(n: int) -> int:
    """``2(f_n - 1)``; agrees with a direct count on ``F_n`` from ``n = 4`` on."""
    if n < 1:
        raise DomainError("fib_word_distinct_squares needs n >= 1")
    return 2 * (fib(n) - 1)


def fib_word_total_squares(n: int) -> int:
    """Square occurrences in ``F_n``, ``n >= 3``."""
    if n < FIB_TOTAL_SQUARES_MIN_N:
        raise DomainError(f"fib_word_total_squares needs n >= {FIB_TOTAL_SQUARES_MIN_N}")
    fifths = _exact_div(
        4 * (n + 1) * fib(n + 2) - 2 * (n + 7) * fib(n + 1), 5, f"fib_word_total_squares({n})"
    )
    return _checked(fifths - 4 * fib(n) + n + 2, f"fib_word_total_squares({n})")
