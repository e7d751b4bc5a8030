"""Finite ZWW words, finite Fibonacci words and their factorizations.

Positions are 1-based wherever they leave the package (``Word`` itself
indexes like any Python sequence).  Fibonacci numbers use ``f_1 = f_2 = 1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import ArithmeticOverflowError, CapExceededError, DomainError

LETTER_DTYPE = np.uint32
MAX_LETTER = int(np.iinfo(LETTER_DTYPE).max)
INT64_MAX = 2**63 - 1

MAX_FIB_INDEX = 92
MAX_WORD_INDEX = 86
DEFAULT_MAX_INDEX = 40


class Word(Sequence):
    """Immutable word over the non-negative integers.

    Letters are stored as a read-only ``uint32`` array.
    """

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[int] = ()):
        if isinstance(letters, Word):
            self._letters = letters._letters
            return
        values = list(letters) if not isinstance(letters, np.ndarray) else letters
        arr = np.asarray(values)
        if arr.size == 0:
            arr = np.zeros(0, dtype=LETTER_DTYPE)
        elif arr.ndim != 1 or not np.issubdtype(arr.dtype, np.integer):
            raise TypeError("letters must be a flat sequence of integers")
        elif arr.min() < 0:
            raise DomainError("letters must be non-negative")
        elif int(arr.max()) > MAX_LETTER:
            raise ArithmeticOverflowError("letter does not fit in 32 bits")
        arr = np.array(arr, dtype=LETTER_DTYPE)
        arr.flags.writeable = False
        self._letters = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> Word:
        # trusted constructor: arr is already uint32, 1-d and owned by us
        arr.flags.writeable = False
        obj = cls.__new__(cls)
        obj._letters = arr
        return obj

    @classmethod
    def from_digits(cls, digits: str) -> Word:
        """Build a word from a compact digit string such as ``"01223"``."""
        if not digits.isdigit():
            raise DomainError(f"not a digit string: {digits!r}")
        return cls(int(ch) for ch in digits)

    @property
    def letters(self) -> np.ndarray:
        return self._letters

    def __len__(self) -> int:
        return int(self._letters.shape[0])

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word._wrap(self._letters[index].copy())
        return int(self._letters[index])

    def __iter__(self):
        return iter(self._letters.tolist())

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return np.array_equal(self._letters, other._letters)
        if isinstance(other, (list, tuple)):
            return self.tolist() == list(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.key())

    def __lt__(self, other: Word) -> bool:
        return self.key() < Word(other).key()

    def __add__(self, other: Word) -> Word:
        other = Word(other)
        return Word._wrap(np.concatenate([self._letters, other._letters]))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        if len(self) and int(self._letters.max()) > 9:
            return " ".join(map(str, self.tolist()))
        return "".join(map(str, self.tolist()))

    def tolist(self) -> list[int]:
        return self._letters.tolist()

    def key(self) -> bytes:
        """Big-endian fixed-width encoding; byte order equals lexicographic order."""
        return self._letters.astype(">u4").tobytes()

    def reversed(self) -> Word:
        return Word._wrap(self._letters[::-1].copy())


@dataclass(frozen=True)
class Factorization:
    """Ordered blocks whose concatenation is a target word."""

    blocks: tuple[Word, ...]
    kind: str

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def concat(self) -> Word:
        if not self.blocks:
            return Word()
        return Word._wrap(np.concatenate([b.letters for b in self.blocks]))

    def as_strings(self) -> list[str]:
        return [str(b) for b in self.blocks]


def fib(i: int) -> int:
    """Fibonacci number ``f_i`` with ``f_1 = f_2 = 1``.

    ``f_0`` is deliberately undefined, and indices past 92 would overflow a
    signed 64-bit integer.
    """
    if i < 1:
        raise DomainError(f"fib index must be >= 1, got {i}")
    if i > MAX_FIB_INDEX:
        raise ArithmeticOverflowError(f"f_{i} exceeds 64 bits")
    return _fib_table()[i]


def lucas(i: int) -> int:
    """Lucas number ``L_i`` with ``L_1 = 1, L_2 = 3``."""
    if i < 1:
        raise DomainError(f"lucas index must be >= 1, got {i}")
    if i > MAX_FIB_INDEX - 2:
        raise ArithmeticOverflowError(f"L_{i} exceeds 64 bits")
    # L_i = f_{i-1} + f_{i+1}, with f_0 = 0 for the i = 1 case
    return (fib(i - 1) if i > 1 else 0) + fib(i + 1)


@lru_cache(maxsize=1)
def _fib_table() -> tuple[int, ...]:
    table = [0, 1, 1]
    while len(table) <= MAX_FIB_INDEX:
        table.append(table[-1] + table[-2])
    return tuple(table)


def word_length(k: int) -> int:
    """``|W_k| = |F_k| = f_{k+2}``."""
    if k < 0:
        raise DomainError(f"word index must be >= 0, got {k}")
    return fib(k + 2)


def check_index(k: int, max_length: int | None = None) -> int:
    """Validate a word index against the length cap and return ``|W_k|``.

    ``max_length=None`` applies the default cap (``k <= 40``); an explicit
    cap may raise it as far as ``k = 86``.
    """
    if k < 0:
        raise DomainError(f"word index must be >= 0, got {k}")
    if k > MAX_WORD_INDEX:
        raise CapExceededError(f"k={k} is beyond the hard limit k <= {MAX_WORD_INDEX}")
    n = fib(k + 2)
    cap = fib(DEFAULT_MAX_INDEX + 2) if max_length is None else max_length
    if n > cap:
        raise CapExceededError(f"|W_{k}| = {n} exceeds the length cap {cap}")
    return n


def shift_add(n: int, w: Iterable[int]) -> Word:
    """``n (+) w``: add ``n`` to every letter of ``w``."""
    w = Word(w)
    if n < 0:
        raise DomainError("shift must be non-negative")
    if len(w) and int(w.letters.max()) + n > MAX_LETTER:
        raise ArithmeticOverflowError("shifted letter does not fit in 32 bits")
    return Word._wrap(w.letters + LETTER_DTYPE(n))


def zww(k: int, *, max_length: int | None = None) -> Word:
    """The finite ZWW word ``W_k``, grown by ``W_{i+1} = W_i . (2 (+) W_{i-1})``."""
    n = check_index(k, max_length)
    if k == 0:
        return Word._wrap(np.zeros(1, dtype=LETTER_DTYPE))
    out = np.empty(n, dtype=LETTER_DTYPE)
    out[:2] = (0, 1)
    prev, cur = 1, 2  # |W_{i-1}|, |W_i|
    for _ in range(1, k):
        np.add(out[:prev], 2, out=out[cur : cur + prev])
        prev, cur = cur, cur + prev
    return Word._wrap(out)


def apply_phi(w: Iterable[int]) -> Word:
    """Image of ``w`` under ``phi(2i) = (2i)(2i+1)``, ``phi(2i+1) = 2i+2``."""
    src = Word(w).letters
    if len(src) and int(src.max()) + 1 > MAX_LETTER:
        raise ArithmeticOverflowError("image letter does not fit in 32 bits")
    even = (src % 2) == 0
    sizes = np.where(even, 2, 1)
    out = np.empty(int(sizes.sum()), dtype=LETTER_DTYPE)
    starts = np.cumsum(sizes) - sizes
    out[starts] = np.where(even, src, src + 1)
    out[starts[even] + 1] = src[even] + 1
    return Word._wrap(out)


def zww_by_morphism(k: int, *, max_length: int | None = None) -> Word:
    """``phi^k(0)``; used only to cross-check :func:`zww`."""
    check_index(k, max_length)
    w = Word([0])
    for _ in range(k):
        w = apply_phi(w)
    return w


def fibonacci_word(k: int, *, max_length: int | None = None) -> Word:
    """``F_k = psi^k(0)`` with ``psi(0) = 01, psi(1) = 0``."""
    check_index(k, max_length)
    w = np.zeros(1, dtype=LETTER_DTYPE)
    for _ in range(k):
        img = np.empty(len(w) + int(np.count_nonzero(w == 0)), dtype=LETTER_DTYPE)
        sizes = np.where(w == 0, 2, 1)
        starts = np.cumsum(sizes) - sizes
        img[starts] = 0
        img[starts[w == 0] + 1] = 1
        w = img
    return Word._wrap(w)


def reduce_mod2(w: Iterable[int]) -> Word:
    return Word._wrap(Word(w).letters % 2)


def prefix_factorization(k: int, *, max_length: int | None = None) -> Factorization:
    """``W_k = 01 . X_0 . X_1 ... X_{k-2}`` with ``X_i = 2 (+) W_i``, for ``k >= 2``."""
    if k < 2:
        raise DomainError(f"prefix factorization needs k >= 2, got {k}")
    check_index(k, max_length)
    blocks = [Word([0, 1])] + [shift_add(2, zww(i)) for i in range(k - 1)]
    return Factorization(tuple(blocks), "prefix")


def parity_factorization(k: int, *, max_length: int | None = None) -> Factorization:
    """Split ``W_k`` into shifted copies of words of the same parity, then the letter ``k``.

    For ``k = 2m - 1`` the blocks are ``2(m-j) (+) W_{2j-2}`` for ``j = m..1``;
    for ``k = 2m`` they are ``2(m-j) (+) W_{2j-1}``.
    """
    if k < 1:
        raise DomainError(f"parity factorization needs k >= 1, got {k}")
    check_index(k, max_length)
    m = (k + 1) // 2
    offset = 2 if k % 2 else 1
    blocks = [shift_add(2 * (m - j), zww(2 * j - offset)) for j in range(m, 0, -1)]
    blocks.append(Word([k]))
    return Factorization(tuple(blocks), "parity")


def suffix_block(k: int, j: int, *, max_length: int | None = None) -> Word:
    """``S_{k,j}``: the suffix of ``W_k`` of length ``|W_j|``."""
    if j < 0 or j > k:
        raise DomainError(f"need 0 <= j <= k, got k={k}, j={j}")
    w = zww(k, max_length=max_length)
    return w[len(w) - fib(j + 2) :]


def suffix_factorization(k: int, *, max_length: int | None = None) -> Factorization:
    """``W_{k+1} = S_{k,k} . S_{k,k-2} ... S_{k,k-2*floor(k/2)} . (k+1)``."""
    check_index(k + 1, max_length)
    w = zww(k)
    blocks = [w[len(w) - fib(k - 2 * i + 2) :] for i in range(k // 2 + 1)]
    blocks.append(Word([k + 1]))
    return Factorization(tuple(blocks), "suffix")


def as_word(w) -> Word:
    return w if isinstance(w, Word) else Word(w)
