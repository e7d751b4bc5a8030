"""Linear-time Lyndon array of ``W_k``.

``W_k`` and its array are built together, block by block: each appended
block ``2 (+) W_{k-2}`` reads only the prefix already written, so apart from
the two output buffers the loop keeps three length registers and a counter.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .analysis import LyndonArray, ell_to_lambda
from .exceptions import DomainError
from .words import LETTER_DTYPE, Word, check_index, fib

__all__ = [
    "algorithm_la",
    "algorithm_la_into",
    "la_buffers",
    "ell_to_lambda",
    "la_iterations",
    "two_positions_full_extent_check",
]


@njit(cache=True)
def _la_kernel(k, wk, W, L, build_word):
    # 1-based positions from the pseudocode map to index i - 1
    if build_word:
        W[0] = 0
        W[1] = 1
    L[0] = wk
    L[1] = wk
    w1 = 2  # w_{-1}
    w2 = 1  # w_{-2}
    steps = 0
    for _ in range(2, k + 1):
        w = w1 + w2
        for i in range(w1 + 1, w + 1):
            steps += 1
            if build_word:
                W[i - 1] = W[i - 1 - w1] + 2
            if i == w1 + 1:
                L[i - 1] = wk
            elif L[i - 1 - w1] == wk:
                L[i - 1] = w
            else:
                L[i - 1] = L[i - 1 - w1] + w1
        w2 = w1
        w1 = w
    return steps


def ell_dtype(k: int):
    """Narrowest signed type holding every end position of ``W_k``."""
    return np.int32 if fib(k + 2) <= np.iinfo(np.int32).max else np.int64


def la_buffers(k: int, *, build_word: bool = True, max_length: int | None = None):
    """Allocate output buffers for :func:`algorithm_la_into`.

    Letters of ``W_k`` never exceed ``k <= 86``, so the word buffer is ``uint8``.
    """
    wk = check_index(k, max_length)
    word = np.empty(wk if build_word else 1, dtype=np.uint8)
    return word, np.empty(wk, dtype=ell_dtype(k))


def algorithm_la_into(k: int, word_out: np.ndarray, ell_out: np.ndarray,
                      build_word: bool = True) -> int:
    """Fill caller buffers with ``W_k`` and its Lyndon array; return the step count."""
    wk = fib(k + 2)
    if len(ell_out) != wk or (build_word and len(word_out) != wk):
        raise DomainError(f"buffers must hold {wk} entries")
    if k == 0:
        word_out[0] = 0
        ell_out[0] = 1
        return 0
    return int(_la_kernel(k, wk, word_out, ell_out, build_word))


def _run(k: int, build_word: bool, max_length: int | None):
    W, L = la_buffers(k, build_word=build_word, max_length=max_length)
    steps = algorithm_la_into(k, W, L, build_word)
    return W, L, steps


def algorithm_la(
    k: int, *, build_word: bool = True, max_length: int | None = None
) -> tuple[Word | None, LyndonArray]:
    """Compute ``W_k`` and its Lyndon array (1-based end positions).

    With ``build_word=False`` only the array is produced and the word is
    returned as ``None``.
    """
    W, L, _ = _run(k, build_word, max_length)
    word = Word._wrap(W.astype(LETTER_DTYPE)) if build_word else None
    return word, LyndonArray(L)


def la_iterations(k: int, *, max_length: int | None = None) -> int:
    """Number of inner-loop steps the linear-time algorithm takes for ``W_k``."""
    return _run(k, False, max_length)[2]


def two_positions_full_extent_check(k: int, *, max_length: int | None = None) -> bool:
    """Every letter 2 past position 1 starts a Lyndon factor reaching the end of ``W_k``."""
    if k < 2:
        raise DomainError("needs k >= 2")
    word, arr = algorithm_la(k, max_length=max_length)
    letters = word.letters
    twos = np.flatnonzero(letters[1:] == 2) + 1
    return bool(np.all(arr.ell[twos] == len(letters)))
