import pytest
from hypothesis import given, strategies as st

from permutads.shuffles import (
    Shuffle,
    shuffle_factorize,
    shuffle_of,
    sigma_of,
    staged_product,
    surjection_of_shuffle,
)
from permutads.surjections import Surjection, inverse


def standardize(vals):
    ranks = {v: i for i, v in enumerate(sorted(set(vals)), start=1)}
    return Surjection(tuple(ranks[v] for v in vals))


surjections = st.lists(st.integers(1, 9), min_size=1, max_size=7).map(standardize)


def test_shuffle_validation():
    with pytest.raises(ValueError):
        Shuffle((2, 1), (2, 1, 3))  # first block decreasing
    with pytest.raises(ValueError):
        Shuffle((1, 1), (1, 1))
    with pytest.raises(ValueError):
        Shuffle((0, 2), (1, 2))


def test_shuffle_of_pin():
    t = Surjection((1, 2, 1, 1, 2))
    s = shuffle_of(t)
    assert s.blocks == (3, 2)
    assert s.perm == (1, 3, 4, 2, 5)
    assert sigma_of(t).values == (1, 4, 2, 3, 5)


def test_permutations_are_their_own_unshuffle():
    t = Surjection((2, 3, 1))
    assert sigma_of(t) == t


@given(surjections)
def test_shuffle_surjection_roundtrip(t):
    assert surjection_of_shuffle(shuffle_of(t)) == t


@given(surjections)
def test_sigma_inverts_the_shuffle_word(t):
    assert sigma_of(t).values == inverse(shuffle_of(t).perm)
    assert sigma_of(t).is_permutation()


@given(surjections)
def test_factorization_recombines(t):
    s = shuffle_of(t)
    factors = shuffle_factorize(s)
    assert len(factors) == max(t.k - 1, 0)
    if factors:
        assert staged_product(factors, s.blocks) == s


def test_factorization_pin():
    factors = shuffle_factorize(Shuffle((1, 1, 1), (2, 3, 1)))
    assert [f.perm for f in factors] == [(2, 3, 1), (1, 2)]
    assert [f.blocks for f in factors] == [(2, 1), (1, 1)]


def test_factor_blocks_peel_the_last_level():
    # Block sizes of factor j are (i_1 + .. + i_{k-j}, i_{k-j+1}).
    t = Surjection((1, 2, 3, 1, 2, 1))
    sizes = t.preimage_sizes()
    for j, factor in enumerate(shuffle_factorize(shuffle_of(t)), start=1):
        head = sum(sizes[: t.k - j])
        assert factor.blocks == (head, sizes[t.k - j])
