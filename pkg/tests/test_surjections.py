import json

import pytest
from hypothesis import given, strategies as st

from permutads.surjections import (
    UNIT,
    Surjection,
    compose,
    concat,
    concat_words,
    corolla,
    count_surjections,
    enumerate_surjections,
    identity_word,
    inverse,
    inversions,
    substitute,
    word_sign,
)


def standardize(vals):
    ranks = {v: i for i, v in enumerate(sorted(set(vals)), start=1)}
    return Surjection(tuple(ranks[v] for v in vals))


surjections = st.lists(st.integers(1, 9), min_size=1, max_size=6).map(standardize)
words = st.integers(1, 6).flatmap(
    lambda n: st.permutations(range(1, n + 1))
).map(tuple)


def test_validation():
    with pytest.raises(ValueError):
        Surjection((1, 3))
    with pytest.raises(ValueError):
        Surjection((0, 1))
    assert Surjection(()).k == 0


def test_basic_properties():
    t = Surjection((1, 2, 1))
    assert (t.n, t.k, t.arity, t.dim) == (3, 2, 4, 1)
    assert t.preimage(1) == (1, 3)
    assert t.preimage_sizes() == (2, 1)
    assert not t.is_permutation()
    assert t.csv_key() == "1-2-1"


def test_substitution_pin():
    t = Surjection((1, 2, 1))
    parts = (Surjection((2, 1)), Surjection((1,)))
    assert substitute(t, parts) == Surjection((2, 3, 1))


def test_substitution_arity_mismatch():
    with pytest.raises(ValueError):
        substitute(Surjection((1, 2, 1)), (Surjection((1,)), Surjection((1,))))


@given(surjections)
def test_corolla_units(t):
    assert substitute(corolla(t.n), (t,)) == t
    parts = tuple(corolla(size) for size in t.preimage_sizes())
    assert substitute(t, parts) == t


@given(surjections, surjections)
def test_concat_targets(t, w):
    both = concat(t, w)
    assert both.n == t.n + w.n
    assert both.k == t.k + w.k
    assert concat(UNIT, t) == t == concat(t, UNIT)


def test_enumeration_counts():
    totals = [len(enumerate_surjections(n)) for n in range(5)]
    assert totals == [1, 1, 3, 13, 75]
    assert len(enumerate_surjections(5)) == 541
    assert len(enumerate_surjections(3, 2)) == count_surjections(3, 2) == 6
    assert enumerate_surjections(2) == sorted(enumerate_surjections(2))
    assert enumerate_surjections(3, 9) == []


@given(surjections)
def test_json_roundtrip(t):
    assert Surjection.from_json(json.loads(json.dumps(t.to_json()))) == t


def test_json_declared_sizes_are_checked():
    with pytest.raises(ValueError):
        Surjection.from_json({"n": 3, "values": [1, 2]})
    with pytest.raises(ValueError):
        Surjection.from_json({"k": 1, "values": [1, 2]})


@given(words)
def test_word_inverse(w):
    n = len(w)
    assert compose(w, inverse(w)) == identity_word(n)
    assert compose(inverse(w), w) == identity_word(n)
    assert inversions(w) == inversions(inverse(w))


word_pairs = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1))
    )
).map(lambda uw: (tuple(uw[0]), tuple(uw[1])))


@given(word_pairs)
def test_word_sign_multiplicative(uw):
    u, w = uw
    assert word_sign(compose(u, w)) == word_sign(u) * word_sign(w)


@given(words, words)
def test_concat_words_blocks(u, w):
    both = concat_words(u, w)
    assert both[: len(u)] == u
    assert inversions(both) == inversions(u) + inversions(w)


def test_inversions_pin():
    assert inversions((2, 3, 1)) == 2
    assert inversions((1, 2, 3)) == 0
    assert word_sign((2, 1)) == -1
