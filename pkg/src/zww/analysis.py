"""Definition-level censuses of factors of arbitrary integer words.

Everything here is deliberately direct (quadratic scans, no suffix
structures) so it can serve as the oracle for the closed forms.  Reported
positions are 1-based.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .exceptions import DomainError
from .words import Word, as_word

_W = 4  # bytes per letter in Word.key()


class FactorOccurrence(NamedTuple):
    start: int
    length: int


class SquareOccurrence(NamedTuple):
    start: int
    period: int

    @property
    def length(self) -> int:
        return 2 * self.period


class RunOccurrence(NamedTuple):
    start: int
    length: int
    period: int


@dataclass
class CensusReport:
    what: str
    distinct: int
    total: int
    witnesses: list | None = None
    factors: set[Word] = field(default_factory=set, repr=False)

    def to_dict(self) -> dict:
        return {
            "what": self.what,
            "distinct": self.distinct,
            "total": self.total,
            "witnesses": [list(o) for o in self.witnesses or []],
        }


def count_letter(w, n: int) -> int:
    return int(np.count_nonzero(as_word(w).letters == n))


def palindrome_census(w, witnesses: bool = False) -> CensusReport:
    """All palindromic factors of ``w``, single letters included."""
    w = as_word(w)
    seq = w.tolist()
    key = w.key()
    n = len(seq)
    occ = []
    seen = set()
    # expand around each of the 2n - 1 centres
    for centre in range(2 * n - 1):
        lo = centre // 2
        hi = lo + centre % 2
        while lo >= 0 and hi < n and seq[lo] == seq[hi]:
            occ.append(FactorOccurrence(lo + 1, hi - lo + 1))
            seen.add(key[_W * lo : _W * (hi + 1)])
            lo -= 1
            hi += 1
    occ.sort()
    return CensusReport(
        "palindromes",
        len(seen),
        len(occ),
        occ if witnesses else None,
        {_from_key(k) for k in seen},
    )


def _square_hits(w: Word):
    """Yield ``(start0, period)`` for every square, by period then start."""
    a = w.letters.astype(np.int64)
    n = len(a)
    for p in range(1, n // 2 + 1):
        eq = (a[:-p] == a[p:]).astype(np.int64)
        # window sums of length p over eq: a square of period p starts at s
        # iff eq[s .. s+p-1] are all true
        csum = np.concatenate(([0], np.cumsum(eq)))
        windows = csum[p : n - p + 1] - csum[: n - 2 * p + 1]
        for s in np.flatnonzero(windows == p).tolist():
            yield s, p


def square_census(w, witnesses: bool = False) -> CensusReport:
    """Squares counted by ``(start, period)``; halves need not be primitive."""
    w = as_word(w)
    key = w.key()
    occ = []
    seen = set()
    for s, p in _square_hits(w):
        occ.append(SquareOccurrence(s + 1, p))
        seen.add(key[_W * s : _W * (s + 2 * p)])
    occ.sort()
    return CensusReport(
        "squares", len(seen), len(occ), occ if witnesses else None,
        {_from_key(k) for k in seen},
    )


def straddling_square_census(w, boundary: int, witnesses: bool = True) -> CensusReport:
    """Squares covering both positions ``boundary`` and ``boundary + 1``."""
    w = as_word(w)
    if not 1 <= boundary < len(w):
        raise DomainError(f"boundary must satisfy 1 <= boundary < {len(w)}")
    full = square_census(w, witnesses=True)
    occ = [o for o in full.witnesses if o.start <= boundary < o.start + 2 * o.period - 1]
    key = w.key()
    seen = {key[_W * (o.start - 1) : _W * (o.start - 1 + 2 * o.period)] for o in occ}
    return CensusReport(
        "straddling-squares", len(seen), len(occ), occ if witnesses else None,
        {_from_key(k) for k in seen},
    )


def minimal_period(w) -> int:
    seq = as_word(w).tolist()
    n = len(seq)
    for p in range(1, n + 1):
        if seq[: n - p] == seq[p:]:
            return p
    return n


def run_census(w) -> list[RunOccurrence]:
    """Maximal repetitions of exponent >= 2, each with its minimal period."""
    w = as_word(w)
    a = w.letters.astype(np.int64)
    n = len(a)
    runs = set()
    for p in range(1, n // 2 + 1):
        eq = np.concatenate(([False], a[:-p] == a[p:], [False]))
        edges = np.flatnonzero(np.diff(eq.astype(np.int8)))
        for lo, hi in zip(edges[::2].tolist(), edges[1::2].tolist()):
            # eq[lo..hi-1] true: w[lo .. hi-1+p] has period p and is maximal
            if hi - lo >= p:
                start, length = lo, hi - lo + p
                if minimal_period(w[start : start + length]) == p:
                    runs.add(RunOccurrence(start + 1, length, p))
    return sorted(runs)


def is_primitive(w) -> bool:
    seq = as_word(w).tolist()
    n = len(seq)
    return not any(n % p == 0 and seq[: n - p] == seq[p:] for p in range(1, n))


def is_lyndon(w) -> bool:
    """True iff ``w`` is primitive and strictly smaller than each proper suffix."""
    w = as_word(w)
    if len(w) == 0:
        raise DomainError("the empty word is not a Lyndon candidate")
    return _is_lyndon_key(w.key()) and is_primitive(w)


def _is_lyndon_key(key: bytes) -> bool:
    return all(key < key[s:] for s in range(_W, len(key), _W))


@dataclass
class LyndonArray:
    """Longest Lyndon factor at each position, as 1-based end positions."""

    ell: np.ndarray

    def __post_init__(self):
        ell = np.asarray(self.ell)
        if ell.dtype not in (np.int32, np.int64):
            ell = ell.astype(np.int64)
        ell.flags.writeable = False
        self.ell = ell

    @property
    def lam(self) -> np.ndarray:
        return ell_to_lambda(self.ell)

    def __len__(self) -> int:
        return len(self.ell)

    def __eq__(self, other) -> bool:
        other_ell = other.ell if isinstance(other, LyndonArray) else np.asarray(other)
        return np.array_equal(self.ell, other_ell)


def ell_to_lambda(ell) -> np.ndarray:
    """``lambda[i] = ell[i] - i + 1`` with 1-based ``i``."""
    ell = ell.ell if isinstance(ell, LyndonArray) else np.asarray(ell, dtype=np.int64)
    return ell.astype(np.int64) - np.arange(len(ell), dtype=np.int64)


def lambda_to_ell(lam) -> np.ndarray:
    lam = np.asarray(lam, dtype=np.int64)
    return lam + np.arange(len(lam), dtype=np.int64)


def _longest_lyndon_prefix(seq: list[int], i: int) -> int:
    # first factor of the Lyndon factorization of seq[i:] (Duval)
    n = len(seq)
    k, j = i, i + 1
    while j < n and seq[k] <= seq[j]:
        k = i if seq[k] < seq[j] else k + 1
        j += 1
    return j - k


def lyndon_array_bruteforce(w) -> LyndonArray:
    """Per-position longest Lyndon prefix of each suffix; quadratic time."""
    w = as_word(w)
    if len(w) == 0:
        raise DomainError("Lyndon array of the empty word is undefined")
    seq = w.tolist()
    return LyndonArray([i + _longest_lyndon_prefix(seq, i) for i in range(len(seq))])


def lyndon_factor_census(w) -> dict[int, int]:
    """Number of distinct Lyndon factors of ``w``, keyed by first letter."""
    w = as_word(w)
    seq = w.tolist()
    key = w.key()
    n = len(seq)
    seen = set()
    counts: Counter[int] = Counter()
    for i in range(n):
        first = seq[i]
        for j in range(i, n):
            if seq[j] < first:
                # every longer factor has a suffix starting below `first`
                break
            fk = key[_W * i : _W * (j + 1)]
            if fk in seen:
                continue
            seen.add(fk)
            if _is_lyndon_key(fk):
                counts[first] += 1
    return {c: counts.get(c, 0) for c in sorted(set(seq))}


def lyndon_census(w, witnesses: bool = False) -> CensusReport:
    """Distinct and total Lyndon factors, plus the per-letter breakdown in ``by_letter``."""
    w = as_word(w)
    seq = w.tolist()
    key = w.key()
    n = len(seq)
    seen = set()
    occ = []
    for i in range(n):
        for j in range(i, n):
            if seq[j] < seq[i]:
                break
            fk = key[_W * i : _W * (j + 1)]
            if _is_lyndon_key(fk):
                occ.append(FactorOccurrence(i + 1, j - i + 1))
                seen.add(fk)
    report = CensusReport(
        "lyndon", len(seen), len(occ), occ if witnesses else None,
        {_from_key(k) for k in seen},
    )
    return report


def _from_key(key: bytes) -> Word:
    return Word(np.frombuffer(key, dtype=">u4"))
