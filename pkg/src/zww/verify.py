"""Formula-versus-oracle checks for every counting claim, grouped by selector.

Formulas are looked up through the ``formulas`` module at call time, so a
patched formula is what gets verified.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from . import analysis, formulas, lyndon_array
from .words import Word, fib, fibonacci_word, zww

Check = Iterator[tuple[tuple, object, object]]


@dataclass
class VerificationOutcome:
    """Result of one theorem check.

    A counterexample holds ``params``, ``expected`` (the claimed value: closed
    form, published value or linear-time algorithm output) and ``actual`` (what direct
    computation gives).
    """

    theorem: str
    lo: int
    hi: int
    status: str
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=None)
def _zww(k: int) -> Word:
    return zww(k)


@lru_cache(maxsize=None)
def _palindromes(k: int):
    return analysis.palindrome_census(_zww(k))


@lru_cache(maxsize=None)
def _squares(k: int):
    return analysis.square_census(_zww(k), witnesses=True)


@lru_cache(maxsize=None)
def _fib_squares(n: int):
    return analysis.square_census(fibonacci_word(n))


def _letter_counts(lo: int, hi: int) -> Check:
    for i in range(lo, hi + 1):
        w = _zww(i)
        for n in range(i + 3):
            yield (i, n), formulas.letter_count(i, n), analysis.count_letter(w, n)


def _letter_sum(lo: int, hi: int) -> Check:
    for k in range(max(lo, 1), hi + 1):
        yield (k,), formulas.letter_sum(k), int(_zww(k).letters.sum(dtype=np.int64))


def _letter_sum_columns(lo: int, hi: int) -> Check:
    for i in range(max(lo, 1), hi + 1):
        by_column = sum(n * formulas.letter_count(i, n) for n in range(i + 1))
        yield (i,), formulas.letter_sum(i), by_column


def _pal_total(lo: int, hi: int) -> Check:
    for i in range(lo, hi + 1):
        yield (i,), formulas.total_palindromes(i), _palindromes(i).total


def _pal_distinct(lo: int, hi: int) -> Check:
    for i in range(lo, hi + 1):
        yield (i,), formulas.distinct_palindromes(i), _palindromes(i).distinct


def _pal_inventory(lo: int, hi: int) -> Check:
    for i in range(lo, hi + 1):
        expected = sorted(map(str, formulas.palindrome_inventory(i).members()))
        yield (i,), expected, sorted(map(str, _palindromes(i).factors))


def _sq_distinct(lo: int, hi: int) -> Check:
    for m in range(max(lo, 1), hi + 1):
        yield (m,), formulas.distinct_square_count(m), _squares(m).distinct


def _sq_new(lo: int, hi: int) -> Check:
    for k in range(lo, hi + 1):
        inv = formulas.new_squares(k)
        host, before = _zww(k + 1).key(), _zww(k).key()
        periods = [fib(k - 2 * i + 2) for i in range(1, k // 2 + 1)]
        ok = [
            _occurs(sq.key(), host) and not _occurs(sq.key(), before)
            and len(sq) == 2 * p
            for sq, p in zip(inv.new_squares, inv.new_periods)
        ]
        fresh = _squares(k + 1).factors - _squares(k).factors if k >= 1 else set()
        yield (k,), (periods, True), (list(inv.new_periods), all(ok) and fresh == set(inv.new_squares))


def _occurs(needle: bytes, hay: bytes) -> bool:
    # aligned search in the 4-byte letter encoding
    start = hay.find(needle)
    while start != -1:
        if start % 4 == 0:
            return True
        start = hay.find(needle, start + 1)
    return False


def _sq_total(lo: int, hi: int) -> Check:
    for m in range(max(lo, 1), hi + 1):
        yield (m,), formulas.total_squares(m), _squares(m).total


def _sq_straddling(lo: int, hi: int) -> Check:
    for m in range(max(lo, 2), hi + 1):
        census = analysis.straddling_square_census(_zww(m), fib(m + 1))
        expected = formulas.straddling_square_count(m)
        actual = census.total
        if m >= 3 and census.total == 1:
            start, square = formulas.straddling_square_witness(m)
            occ = census.witnesses[0]
            found = _zww(m)[occ.start - 1 : occ.start - 1 + 2 * occ.period]
            expected = (expected, start, str(square))
            actual = (census.total, occ.start, str(found))
        yield (m,), expected, actual


def _runs(lo: int, hi: int) -> Check:
    for k in range(lo, hi + 1):
        bad = [r for r in analysis.run_census(_zww(k)) if r.length != 2 * r.period]
        yield (k,), [], [tuple(r) for r in bad]


def _lyndon_counts(lo: int, hi: int) -> Check:
    for n in range(lo, hi + 1):
        census = analysis.lyndon_factor_census(_zww(n))
        for c in range(n + 1):
            yield (n, c), formulas.lyndon_count(n, c), census.get(c, 0)


def _lyndon_total(lo: int, hi: int) -> Check:
    for n in range(lo, hi + 1):
        total = sum(formulas.lyndon_count(n, c) for c in range(n + 1))
        yield (n,), total, analysis.lyndon_census(_zww(n)).distinct


L2_SEQUENCE = (1, 3, 7, 18, 42, 93, 195)


def _lyndon_two_sequence(lo: int, hi: int) -> Check:
    # published values for n = 2..8
    for n, value in enumerate(L2_SEQUENCE, start=2):
        yield (n,), value, formulas.lyndon_count(n, 2)


def _zww_lyndon(lo: int, hi: int) -> Check:
    for n in range(lo, hi + 1):
        yield (n,), True, formulas.is_zww_lyndon(n)


def _lyndon_array(lo: int, hi: int) -> Check:
    for k in range(lo, hi + 1):
        word, arr = lyndon_array.algorithm_la(k)
        brute = analysis.lyndon_array_bruteforce(_zww(k))
        diff = np.flatnonzero(arr.ell != brute.ell)
        if word != _zww(k):
            yield (k, "word"), str(word), str(_zww(k))
        elif diff.size:
            i = int(diff[0])
            yield (k, i + 1), int(arr.ell[i]), int(brute.ell[i])
        else:
            yield (k,), True, True


def _la_iterations(lo: int, hi: int) -> Check:
    for k in range(max(lo, 2), hi + 1):
        yield (k,), fib(k + 2) - 2, lyndon_array.la_iterations(k)


def _la_two_rule(lo: int, hi: int) -> Check:
    for k in range(max(lo, 2), hi + 1):
        yield (k,), True, lyndon_array.two_positions_full_extent_check(k)


def _fib_total(lo: int, hi: int) -> Check:
    for n in range(max(lo, formulas.FIB_TOTAL_SQUARES_MIN_N), hi + 1):
        yield (n,), formulas.fib_word_total_squares(n), _fib_squares(n).total


def _fib_distinct(lo: int, hi: int) -> Check:
    for n in range(max(lo, formulas.FIB_DISTINCT_SQUARES_MIN_N), hi + 1):
        yield (n,), formulas.fib_word_distinct_squares(n), _fib_squares(n).distinct


@dataclass(frozen=True)
class Theorem:
    id: str
    selector: str
    lo: int
    hi: int
    check: Callable[[int, int], Check]


THEOREMS = (
    Theorem("letter-count-binomial", "letter-counts", 0, 18, _letter_counts),
    Theorem("letter-sum-direct", "letter-sum", 1, 30, _letter_sum),
    Theorem("letter-sum-columns", "letter-sum", 1, 18, _letter_sum_columns),
    Theorem("palindromes-total", "palindromes", 0, 16, _pal_total),
    Theorem("palindromes-distinct", "palindromes", 0, 16, _pal_distinct),
    Theorem("palindromes-inventory", "palindromes", 0, 16, _pal_inventory),
    Theorem("squares-distinct", "squares", 1, 15, _sq_distinct),
    Theorem("squares-new", "squares", 0, 14, _sq_new),
    Theorem("squares-total", "total-squares", 1, 15, _sq_total),
    Theorem("squares-straddling", "total-squares", 2, 15, _sq_straddling),
    Theorem("runs-are-squares", "runs", 0, 14, _runs),
    Theorem("lyndon-count", "lyndon-counts", 0, 12, _lyndon_counts),
    Theorem("lyndon-count-sum", "lyndon-counts", 0, 12, _lyndon_total),
    Theorem("lyndon-two-sequence", "lyndon-counts", 2, 8, _lyndon_two_sequence),
    Theorem("zww-is-lyndon", "lyndon-counts", 0, 14, _zww_lyndon),
    Theorem("lyndon-array-oracle", "lyndon-array", 0, 16, _lyndon_array),
    Theorem("lyndon-array-linear", "lyndon-array", 2, 30, _la_iterations),
    Theorem("lyndon-array-two-rule", "lyndon-array", 2, 16, _la_two_rule),
    Theorem("fibonacci-total-squares", "fibonacci-table", 3, 12, _fib_total),
    Theorem("fibonacci-distinct-squares", "fibonacci-table", 4, 12, _fib_distinct),
)

SELECTORS = ("all",) + tuple(dict.fromkeys(t.selector for t in THEOREMS))


def run_theorem(theorem: Theorem, hi: int | None = None) -> VerificationOutcome:
    hi = theorem.hi if hi is None else hi
    # fixed published values ignore the range override
    if theorem.check is _lyndon_two_sequence:
        hi = theorem.hi
    for params, expected, actual in theorem.check(theorem.lo, hi):
        if expected != actual:
            return VerificationOutcome(
                theorem.id, theorem.lo, hi, "fail",
                {"params": list(params), "expected": expected, "actual": actual},
            )
    return VerificationOutcome(theorem.id, theorem.lo, hi, "pass")


def verify(selector: str = "all", max_k: int | None = None) -> list[VerificationOutcome]:
    """Run the selected theorem checks; ``max_k`` overrides every upper bound."""
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}")
    chosen = [t for t in THEOREMS if selector in ("all", t.selector)]
    return [run_theorem(t, max_k) for t in chosen]


def clear_caches() -> None:
    for fn in (_zww, _palindromes, _squares, _fib_squares):
        fn.cache_clear()
