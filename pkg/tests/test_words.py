import itertools

import pytest
from hypothesis import given, strategies as st

from mutual_borders.words import (
    BinaryWord,
    PairClass,
    abelian_equiv,
    all_words,
    border_profile,
    classify,
    complement,
    lsb_pair,
    parikh,
    reverse,
    shortest_abelian_border,
    shortest_internal_border,
)

words_text = st.text(alphabet="ab", max_size=63)


def naive_lsb(u: str, v: str):
    """Direct slice comparison, independent of the bit-packed scan."""
    n = len(u)
    for size in range(1, n):
        if sorted(u[n - size:]) == sorted(v[:size]):
            return size
    return None


@pytest.mark.parametrize("text, expected", [("abba", (2, 2)), ("aaa", (3, 0)), ("", (0, 0))])
def test_parikh(text, expected):
    assert parikh(text) == expected


@pytest.mark.parametrize("x, y, expected", [("baba", "abba", True), ("ab", "aa", False), ("", "", True),
                                            ("ab", "abb", False)])
def test_abelian_equiv(x, y, expected):
    assert abelian_equiv(x, y) is expected


def test_reverse_and_complement():
    assert str(reverse("aab")) == "baa"
    assert str(complement("aab")) == "bba"
    assert str(reverse("")) == ""


@given(words_text)
def test_text_round_trip(text):
    w = BinaryWord.parse(text)
    assert str(w) == text
    assert w.bits >> w.length == 0
    assert parikh(w).count_a + parikh(w).count_b == len(text)


def test_invalid_words_rejected():
    with pytest.raises(ValueError):
        BinaryWord.parse("abc")
    with pytest.raises(ValueError):
        BinaryWord(64)
    with pytest.raises(ValueError):
        BinaryWord(2, 0b100)


@pytest.mark.parametrize("text, expected", [("ababaaabb", 4), ("ab", None), ("aa", 1), ("a", None), ("", None)])
def test_shortest_abelian_border(text, expected):
    assert shortest_abelian_border(text) == expected


@pytest.mark.parametrize("u, v, expected", [("aabb", "abbb", 3), ("aaa", "bbb", None), ("aabab", "aabba", 4)])
def test_lsb_pair(u, v, expected):
    assert lsb_pair(u, v) == expected


def test_lsb_pair_length_mismatch():
    with pytest.raises(ValueError):
        lsb_pair("ab", "abb")
    with pytest.raises(ValueError):
        classify("ab", "a")


@pytest.mark.parametrize("u, v, expected", [
    ("aabab", "aabba", PairClass.MAB),
    ("aabb", "abbb", PairClass.INTERNAL_ONLY),
    ("abbb", "aabb", PairClass.EXTERNAL_ONLY),
    ("ab", "ba", PairClass.MAB),
    ("aaa", "bbb", PairClass.MAU),
])
def test_classify(u, v, expected):
    assert classify(u, v) is expected


def test_border_profile():
    prof = border_profile("aabab", "aabba")
    assert (prof.i, prof.j) == (4, 1)
    assert prof.disjoint
    prof = border_profile("aba", "bab")
    assert prof.gamma_len == 1
    assert border_profile("aaa", "bbb") is None


def test_single_letter_pairs_are_mau():
    assert all(classify(u, v) is PairClass.MAU for u in "ab" for v in "ab")


@given(st.integers(1, 20).flatmap(lambda n: st.tuples(st.text("ab", min_size=n, max_size=n),
                                                     st.text("ab", min_size=n, max_size=n))))
def test_lsb_matches_naive(pair):
    u, v = pair
    assert lsb_pair(u, v) == naive_lsb(u, v)


@pytest.mark.parametrize("n", range(1, 9))
def test_pair_symmetries_exhaustive(n):
    ws = list(all_words(n))
    for u, v in itertools.product(ws, ws):
        cls = classify(u, v)
        swapped = classify(v, u)
        assert (cls is PairClass.MAB) == (swapped is PairClass.MAB)
        assert (cls is PairClass.INTERNAL_ONLY) == (swapped is PairClass.EXTERNAL_ONLY)
        assert classify(complement(u), complement(v)) is cls
        assert lsb_pair(u, v) == lsb_pair(reverse(v), reverse(u))
        border = shortest_internal_border(u, v)
        if border is not None:
            x, y = border
            assert abelian_equiv(x, y)
            assert classify(x, y) is PairClass.MAU


def test_shortest_border_symmetric_under_reverse_and_complement():
    for n in range(17):
        for w in all_words(n):
            k = shortest_abelian_border(w)
            assert shortest_abelian_border(reverse(w)) == k
            assert shortest_abelian_border(complement(w)) == k
