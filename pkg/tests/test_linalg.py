from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from permutads.linalg import (
    LinComb,
    QPoly,
    SpanBasis,
    csv_triples,
    in_span,
    qpoly_parse,
    span_rank,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)
qpolys = st.lists(rationals, max_size=5).map(lambda cs: QPoly(tuple(cs)))


def test_qpoly_normalizes_trailing_zeros():
    assert QPoly((Fraction(1), Fraction(0))).coeffs == (Fraction(1),)
    assert QPoly(()).degree == -1
    assert not QPoly(())
    assert QPoly.q(0) == QPoly.const(1)


@given(qpolys, qpolys, qpolys)
def test_qpoly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == QPoly(())


@given(qpolys, rationals)
def test_qpoly_evaluation_is_a_homomorphism(p, x):
    q = QPoly.q() + QPoly.const(3)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


def test_qpoly_str_pins():
    assert str(QPoly(())) == "0"
    assert str(QPoly.q(2) + 4 * QPoly.q() + QPoly.const(4)) == "q^2 + 4*q + 4"
    assert str(QPoly.q() - QPoly.const(1)) == "q - 1"
    assert str(QPoly.const(Fraction(-1, 2)) * QPoly.q(3)) == "-1/2*q^3"


@given(qpolys)
def test_qpoly_parse_roundtrip(p):
    assert qpoly_parse(str(p)) == p


def test_qpoly_parse_rejects_garbage():
    with pytest.raises(ValueError):
        qpoly_parse("q + pear")
    with pytest.raises(ValueError):
        qpoly_parse("")


def test_lincomb_drops_zeros():
    v = LinComb({"a": 1, "b": 0})
    assert v.terms() == (("a", 1),)
    assert (v - v).is_zero()
    assert v.get("b") == 0


def test_lincomb_is_not_hashable():
    with pytest.raises(TypeError):
        hash(LinComb({"a": 1}))


def test_lincomb_arithmetic():
    v = LinComb({"a": 1, "b": -1})
    w = LinComb({"b": 1, "c": 2})
    assert (v + w).terms() == (("a", 1), ("c", 2))
    assert (v.scale(2)).get("b") == -2
    assert v.scale(0).is_zero()
    assert v.map_coeffs(lambda c: c * c).get("b") == 1


def test_span_rank_pin():
    vectors = [
        LinComb({1: 1, 2: -1}),
        LinComb({2: 1, 3: -1}),
        LinComb({1: 1, 3: -1}),
    ]
    assert span_rank(vectors) == 2


@given(st.permutations(range(6)))
def test_span_rank_is_order_invariant(order):
    vectors = [
        LinComb({"a": 1, "b": 2}),
        LinComb({"b": 1, "c": 1}),
        LinComb({"a": 1, "b": 1, "c": -1}),
        LinComb({"a": 2, "b": 3, "c": 1}),
        LinComb({"c": 5}),
        LinComb(),
    ]
    shuffled = [vectors[i] for i in order]
    assert span_rank(shuffled) == 3


def test_span_membership_over_q():
    basis = SpanBasis(
        [
            LinComb({"a": QPoly.q(), "b": QPoly.const(1)}),
            LinComb({"b": QPoly.q()}),
        ]
    )
    assert basis.rank == 2
    assert in_span(LinComb({"a": QPoly.q(2), "b": QPoly.q()}), basis)
    assert not in_span(LinComb({"c": QPoly.const(1)}), basis)


def test_mixed_domains_are_rejected():
    with pytest.raises(ValueError):
        span_rank([LinComb({"a": 1}), LinComb({"a": QPoly.q()})])


def test_reduce_returns_remainder():
    basis = SpanBasis([LinComb({"a": 1, "b": 1})])
    rem = basis.reduce(LinComb({"a": 1, "c": 1}))
    assert set(rem.keys()) == {"b", "c"}


def test_pivots_are_lowest_keys():
    basis = SpanBasis(
        [LinComb({"b": 1, "c": 1}), LinComb({"a": 1, "b": 1})]
    )
    assert basis.pivots() == ["a", "b"]


def test_csv_triples_golden():
    vectors = [
        LinComb({"1-2": Fraction(1), "2-1": Fraction(-1)}),
        LinComb({"1-1": QPoly.q() - QPoly.const(1)}),
    ]
    assert csv_triples(vectors) == [
        "row,key,coeff",
        "0,1-2,1",
        "0,2-1,-1",
        "1,1-1,q - 1",
    ]
