import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from zww import (
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
from zww.exceptions import ArithmeticOverflowError, CapExceededError, DomainError
from zww.words import check_index

TABLE_1 = [
    ("0", "0"),
    ("01", "01"),
    ("010", "012"),
    ("01001", "01223"),
    ("01001010", "01223234"),
    ("0100101001001", "0122323423445"),
]

W = Word.from_digits


@pytest.mark.parametrize("i, expected", [(1, 1), (2, 1), (7, 13), (92, 7540113804746346429)])
def test_fib(i, expected):
    assert fib(i) == expected == naive.fib(i)


def test_fib_rejects_zero_and_overflow():
    with pytest.raises(DomainError):
        fib(0)
    with pytest.raises(ArithmeticOverflowError):
        fib(93)


def test_lucas():
    assert [lucas(i) for i in range(1, 8)] == [1, 3, 4, 7, 11, 18, 29]


@pytest.mark.parametrize(
    "n, w, expected",
    [(2, "01223", "23445"), (0, "0122", "0122"), (4, "0", "4")],
)
def test_shift_add(n, w, expected):
    assert shift_add(n, W(w)) == W(expected)


def test_shift_add_overflow():
    with pytest.raises(ArithmeticOverflowError):
        shift_add(1, [2**32 - 1])


@pytest.mark.parametrize("k", range(6))
def test_table_one(k):
    f, w = TABLE_1[k]
    assert str(zww(k)) == w
    assert str(zww_by_morphism(k)) == w
    assert str(fibonacci_word(k)) == f


@pytest.mark.parametrize("w, expected", [("0", "01"), ("01", "012"), ("", "")])
def test_apply_phi(w, expected):
    src = Word() if w == "" else W(w)
    out = apply_phi(src)
    assert (str(out) if expected else len(out)) == (expected or 0)


@given(st.lists(st.integers(0, 50), max_size=30))
def test_apply_phi_letterwise(letters):
    expected = []
    for c in letters:
        expected += [c, c + 1] if c % 2 == 0 else [c + 1]
    assert apply_phi(letters).tolist() == expected


@pytest.mark.parametrize("w, expected", [("01223", "01001"), ("0", "0"),
                                         ("0122323423445", "0100101001001")])
def test_reduce_mod2(w, expected):
    assert reduce_mod2(W(w)) == W(expected)


@pytest.mark.parametrize("k", range(21))
def test_generators_agree(k):
    w = zww(k)
    assert w == zww_by_morphism(k)
    if k <= 14:
        assert w.tolist() == naive.zww_by_phi(k)
    assert len(w) == len(fibonacci_word(k)) == fib(k + 2)
    assert reduce_mod2(w) == fibonacci_word(k)
    if k >= 1:
        assert zww(k + 1) == w + shift_add(2, zww(k - 1))
    assert zww(k + 1)[: len(w)] == w


@pytest.mark.parametrize("k", range(21))
def test_letter_structure(k):
    letters = zww(k).letters
    assert letters[0] == 0 and np.count_nonzero(letters == 0) == 1
    assert letters[-1] == k and np.count_nonzero(letters == k) == 1
    assert letters.max() == k


@pytest.mark.parametrize("k", range(19))
def test_fibonacci_recurrence(k):
    assert fibonacci_word(k + 2) == fibonacci_word(k + 1) + fibonacci_word(k)


def test_cap():
    with pytest.raises(CapExceededError):
        zww(41)
    assert check_index(41, max_length=fib(43)) == fib(43)
    with pytest.raises(CapExceededError):
        check_index(87, max_length=2**63)
    with pytest.raises(CapExceededError):
        zww(10, max_length=50)
    with pytest.raises(DomainError):
        zww(-1)


@pytest.mark.parametrize(
    "k, blocks",
    [(5, ["01", "2", "23", "234", "23445"]), (2, ["01", "2"]), (4, ["01", "2", "23", "234"])],
)
def test_prefix_factorization(k, blocks):
    fact = prefix_factorization(k)
    assert fact.kind == "prefix"
    assert fact.as_strings() == blocks
    assert fact.concat() == zww(k)


@pytest.mark.parametrize(
    "k, blocks",
    [(5, ["01223234", "234", "4", "5"]), (1, ["0", "1"]), (4, ["01223", "23", "4"])],
)
def test_parity_factorization(k, blocks):
    fact = parity_factorization(k)
    assert fact.as_strings() == blocks
    assert fact.concat() == zww(k)


@pytest.mark.parametrize(
    "k, blocks",
    [(4, ["01223234", "234", "4", "5"]), (0, ["0", "1"]), (3, ["01223", "23", "4"])],
)
def test_suffix_factorization(k, blocks):
    fact = suffix_factorization(k)
    assert fact.as_strings() == blocks
    assert fact.concat() == zww(k + 1)


def test_factorizations_reconcatenate():
    for k in range(2, 17):
        assert prefix_factorization(k).concat() == zww(k)
    for k in range(1, 17):
        assert parity_factorization(k).concat() == zww(k)
    for k in range(16):
        assert suffix_factorization(k).concat() == zww(k + 1)


def test_factorization_domain():
    with pytest.raises(DomainError):
        prefix_factorization(1)
    with pytest.raises(DomainError):
        parity_factorization(0)


@pytest.mark.parametrize("k, j, expected", [(5, 3, "23445"), (4, 0, "4"), (5, 5, "0122323423445")])
def test_suffix_block(k, j, expected):
    assert suffix_block(k, j) == W(expected)


def test_suffix_block_shifted_copy():
    for k in range(15):
        for i in range(k // 2 + 1):
            assert suffix_block(k, k - 2 * i) == shift_add(2 * i, zww(k - 2 * i))
        for j in range(k - 1):
            s_j, s_j2 = suffix_block(k, j), suffix_block(k, j + 2)
            assert s_j2[len(s_j2) - len(s_j) :] == s_j
    with pytest.raises(DomainError):
        suffix_block(3, 4)


class TestWord:
    def test_str_and_eq(self):
        w = Word([0, 1, 12])
        assert str(w) == "0 1 12"
        assert w == [0, 1, 12]
        assert w == Word((0, 1, 12))
        assert hash(w) == hash(Word([0, 1, 12]))
        assert repr(W("012")) == "Word('012')"

    def test_immutable(self):
        w = W("012")
        with pytest.raises(ValueError):
            w.letters[0] = 5

    def test_slices_and_concat(self):
        w = W("01223")
        assert w[1:3] == W("12")
        assert w[-1] == 3
        assert w + W("4") == W("012234")

    def test_rejects_bad_letters(self):
        with pytest.raises(DomainError):
            Word([0, -1])
        with pytest.raises(ArithmeticOverflowError):
            Word([2**32])
        with pytest.raises(DomainError):
            Word.from_digits("01a")

    def test_order_is_lexicographic(self):
        assert W("01") < W("012")
        assert W("012") < W("02")
        assert Word([9]) < Word([10])

    @given(st.lists(st.integers(0, 2**32 - 1), max_size=8),
           st.lists(st.integers(0, 2**32 - 1), max_size=8))
    def test_key_order_matches_list_order(self, a, b):
        assert (Word(a).key() < Word(b).key()) == (a < b)
