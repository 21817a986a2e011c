import itertools
import json

import pytest
from hypothesis import given, strategies as st

from permutads.linalg import LinComb, QPoly
from permutads.permutad import (
    IDENTITY,
    DecoratedSurjection,
    GeneratorSet,
    PRESETS,
    arity_of,
    binary_normal_form,
    circ_i,
    circ_t,
    diamond_check,
    free_basis,
    gamma,
    generator_element,
    ideal_component,
    ideal_vectors,
    qpermas_normalize,
    qpermas_relation,
    quotient_dim,
    relation_from_json,
    relation_to_json,
    specialize,
    validate_decorated,
)
from permutads.surjections import Surjection, enumerate_surjections

MU = generator_element("mu", 2)


def test_generator_set_validation():
    with pytest.raises(ValueError):
        GeneratorSet({1: ("D",)})
    assert GeneratorSet({1: ("D",)}, extended=True).extended
    with pytest.raises(ValueError):
        GeneratorSet({2: ("a", "a")})
    assert GeneratorSet({3: ("c",), 2: ("a",)}).arities() == (2, 3)


def test_decorated_surjection_validation():
    with pytest.raises(ValueError):
        DecoratedSurjection(Surjection((1, 2)), ("mu",))
    d = DecoratedSurjection(Surjection((1, 2, 1)), ("a", "b"))
    assert d.arity == 4
    assert d.csv_key() == "1-2-1:a.b"
    assert DecoratedSurjection.from_json(json.loads(json.dumps(d.to_json()))) == d


def test_validate_decorated_against_generators():
    M = GeneratorSet({2: ("mu",)})
    validate_decorated(MU, M)
    with pytest.raises(ValueError):
        validate_decorated(generator_element("nu", 2), M)
    with pytest.raises(ValueError):
        validate_decorated(generator_element("mu", 3), M)


def test_arity_of_rejects_mixed_terms():
    v = LinComb({MU: 1, generator_element("mu", 3): 1})
    with pytest.raises(ValueError):
        arity_of(v)
    assert arity_of(MU) == 2
    assert arity_of(IDENTITY) == 1


def test_gamma_pin():
    # Substituting two mu's along (2, 1) decorates the surjection (2, 1).
    v = gamma(Surjection((2, 1)), [MU, MU])
    assert v.terms() == (
        (DecoratedSurjection(Surjection((2, 1)), ("mu", "mu")), 1),
    )


def test_gamma_checks_arities():
    with pytest.raises(ValueError):
        gamma(Surjection((1, 1)), [MU])  # vertex of size 2 wants arity 3
    with pytest.raises(ValueError):
        gamma(Surjection((1, 2)), [MU])


def test_circ_conventions_match():
    # Slot i = 2 of a binary operation grows the two-level shape (2, 1).
    assert circ_i(MU, MU, 2) == circ_t(MU, MU, Surjection((2, 1)))
    assert circ_i(MU, MU, 1) == circ_t(MU, MU, Surjection((1, 2)))
    with pytest.raises(ValueError):
        circ_i(MU, MU, 3)
    with pytest.raises(ValueError):
        circ_t(MU, MU, Surjection((1, 1)))


def test_identity_is_a_two_sided_unit():
    assert circ_i(MU, IDENTITY, 1) == LinComb.single(MU)
    assert circ_i(MU, IDENTITY, 2) == LinComb.single(MU)
    assert circ_i(IDENTITY, MU, 1) == LinComb.single(MU)


def test_gamma_is_multilinear():
    two_mu = LinComb({MU: 2})
    assert gamma(Surjection((2, 1)), [two_mu, MU]) == gamma(
        Surjection((2, 1)), [MU, MU]
    ).scale(2)


def test_diamond_exhaustive_small():
    g3 = generator_element("g", 3)
    for r in enumerate_surjections(3, 3) + enumerate_surjections(4, 3):
        sizes = r.preimage_sizes()
        args = [MU if size == 1 else g3 for size in sizes]
        assert diamond_check(r, args[2], args[1], args[0])


def test_free_basis_counts():
    M = GeneratorSet({2: ("mu",)})
    assert [len(free_basis(M, n)) for n in range(1, 6)] == [1, 1, 2, 6, 24]
    two = GeneratorSet({2: ("one", "tau")})
    assert len(free_basis(two, 3)) == 8
    assert len(free_basis(two, 4)) == 48
    with pytest.raises(ValueError):
        free_basis(GeneratorSet({1: ("D",)}, extended=True), 2)


def test_free_basis_is_sorted():
    M = GeneratorSet({2: ("one", "tau")})
    basis = free_basis(M, 3)
    assert basis == sorted(basis)


def test_relation_json_roundtrip():
    rel = qpermas_relation()
    back = relation_from_json(json.loads(json.dumps(relation_to_json(rel))))
    assert back == rel
    plain = circ_i(MU, MU, 1) - circ_i(MU, MU, 2)
    assert relation_from_json(json.loads(json.dumps(relation_to_json(plain)))) == plain


def test_qpermas_relation_shape():
    rel = qpermas_relation()
    keys = {d.t.values: c for d, c in rel.terms()}
    assert keys[(2, 1)] == QPoly.const(1)
    assert keys[(1, 2)] == -QPoly.q()


def test_qpermas_normalize_pins():
    d = DecoratedSurjection(Surjection((2, 3, 1)), ("mu",) * 3)
    assert qpermas_normalize(d).exponent == 2
    with pytest.raises(ValueError):
        qpermas_normalize(DecoratedSurjection(Surjection((1, 1)), ("mu",)))


def test_quotient_dims_per_preset():
    gens, rels = PRESETS["permMag"]()
    assert quotient_dim(rels, gens, 5) == 24
    gens, rels = PRESETS["qPermAs"]()
    assert [quotient_dim(rels, gens, n) for n in (2, 3, 4)] == [1, 1, 1]
    gens, rels = PRESETS["permAsSh"]()
    assert [quotient_dim(rels, gens, n) for n in (3, 4)] == [6, 24]


def test_qpermas_specializations():
    gens, rels = PRESETS["qPermAs"]()
    for value, expect in ((1, 1), (-1, 1), (2, 1)):
        for n in (3, 4):
            vectors = [specialize(v, value) for v in ideal_vectors(rels, gens, n)]
            from permutads.linalg import span_rank

            dim = len(free_basis(gens, n)) - span_rank(vectors)
            assert dim == expect


def test_ideal_membership():
    gens, rels = PRESETS["qPermAs"]()
    component = ideal_component(rels, gens, 3)
    mu_mu_1 = circ_i(MU, MU, 1).map_coeffs(QPoly.const)
    mu_mu_2 = circ_i(MU, MU, 2).map_coeffs(QPoly.const)
    assert component.in_span(mu_mu_2 - mu_mu_1.scale(QPoly.q()))
    assert not component.in_span(mu_mu_1)


def test_binary_normal_form_pins():
    assert binary_normal_form("mu") == MU
    assert binary_normal_form(("mu", 1, "mu")).t.values == (1, 2)
    assert binary_normal_form(("mu", 2, "mu")).t.values == (2, 1)
    assert binary_normal_form((("mu", 2, "mu"), 1, "mu")).t.values == (1, 3, 2)
    with pytest.raises(ValueError):
        binary_normal_form(("nu", 1, "mu"))
    with pytest.raises(ValueError):
        binary_normal_form(("mu", 1))


@given(st.integers(2, 5))
def test_binary_left_combs_stay_sorted(n):
    # Nesting always at slot 1 gives the identity permutation element.
    expr = "mu"
    for _ in range(n - 2):
        expr = (expr, 1, "mu")
    assert binary_normal_form(expr).t.values == tuple(range(1, n))


def test_sequential_axiom_instance():
    lam, mu, nu = MU, MU, generator_element("g", 3)
    for i in (1, 2):
        for j in (1, 2):
            assert circ_i(circ_i(lam, mu, i), nu, i - 1 + j) == circ_i(
                lam, circ_i(mu, nu, j), i
            )
