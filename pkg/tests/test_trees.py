import pytest
from hypothesis import given, strategies as st

from permutads.surjections import Surjection
from permutads.trees import (
    LeveledTree,
    ShuffleLeftComb,
    comb_from_nested,
    comb_from_surjection,
    comb_to_nested,
    comb_to_surjection,
    leaves_of,
    strip_levels,
    tree_from_nested,
    tree_from_surjection,
    tree_to_nested,
    tree_to_surjection,
    validate_shuffle_tree,
)


def standardize(vals):
    ranks = {v: i for i, v in enumerate(sorted(set(vals)), start=1)}
    return Surjection(tuple(ranks[v] for v in vals))


surjections = st.lists(st.integers(1, 9), min_size=1, max_size=7).map(standardize)


def test_leveled_tree_validation():
    with pytest.raises(ValueError):
        LeveledTree(((1,), ()))
    with pytest.raises(ValueError):
        LeveledTree(((1,), (3,)))
    assert LeveledTree(((3, 1), (2,))).levels == ((1, 3), (2,))


def test_comb_validation():
    with pytest.raises(ValueError):
        ShuffleLeftComb(((2, 1),))
    with pytest.raises(ValueError):
        ShuffleLeftComb(((1,), (1,)))


def test_nested_renders_pin():
    assert tree_to_nested(tree_from_surjection(Surjection((1, 2, 1)))) == [
        2,
        [1, 0, 1],
        [1, 2, 3],
    ]
    assert tree_to_nested(tree_from_surjection(Surjection((1, 1, 2)))) == [
        2,
        [1, 0, 1, 2],
        3,
    ]
    assert comb_to_nested(comb_from_surjection(Surjection((1, 2, 1, 1, 2)))) == [
        [0, 1, 3, 4],
        2,
        5,
    ]


def test_detached_strands_share_a_level():
    # Gaps 1 and 3 close at level 1 but cannot share a planar vertex.
    nested = tree_to_nested(tree_from_surjection(Surjection((1, 2, 1))))
    assert nested[1][0] == nested[2][0] == 1


@given(surjections)
def test_tree_roundtrips(t):
    tr = tree_from_surjection(t)
    assert tree_to_surjection(tr) == t
    assert tree_from_nested(tree_to_nested(tr)) == tr
    assert LeveledTree.from_json(tr.to_json()) == tr


@given(surjections)
def test_comb_roundtrips(t):
    c = comb_from_surjection(t)
    assert comb_to_surjection(c) == t
    assert comb_from_nested(comb_to_nested(c)) == c
    assert ShuffleLeftComb.from_json(c.to_json()) == c


@given(surjections)
def test_renders_are_shuffle_trees(t):
    plain = strip_levels(tree_to_nested(tree_from_surjection(t)))
    ok, witness = validate_shuffle_tree(plain)
    assert ok and witness is None
    ok, witness = validate_shuffle_tree(comb_to_nested(comb_from_surjection(t)))
    assert ok and witness is None


@given(surjections)
def test_leaf_sets(t):
    nested = comb_to_nested(comb_from_surjection(t))
    assert sorted(leaves_of(nested)) == list(range(t.n + 1))


def test_validate_shuffle_tree_witness():
    ok, witness = validate_shuffle_tree([[0, 1, 3, 4], 5, 2])
    assert not ok and witness == ()
    ok, witness = validate_shuffle_tree([0, [2, 1], 3])
    assert not ok and witness == (1,)


def test_validate_shuffle_tree_rejects_bad_leaves():
    with pytest.raises(ValueError):
        validate_shuffle_tree([0, 1, 1])
    with pytest.raises(ValueError):
        validate_shuffle_tree([1, 2, 3])


def test_from_json_checks_consistency():
    tr = tree_from_surjection(Surjection((1, 2)))
    broken = tr.to_json()
    broken["nested"] = [1, 0, 1]
    with pytest.raises(ValueError):
        LeveledTree.from_json(broken)
