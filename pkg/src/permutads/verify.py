"""Named consistency checks over every component, for the CLI and the tests.

Each check is exhaustive up to a size bound and raises :class:`CheckFailed`
with a JSON-serializable witness on the first counterexample, so the command
line can report exactly what broke.  The registry at the bottom pairs each
check with the default bound it is known to pass at desk scale; quotient
computations default lower than plain enumeration because their cost grows
with the free basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import bruhat, chains, derivations
from .linalg import LinComb, QPoly, SpanBasis, span_rank
from .permutad import (
    IDENTITY,
    DecoratedSurjection,
    GeneratorSet,
    PRESETS,
    binary_normal_form,
    circ_i,
    diamond_check,
    free_basis,
    generator_element,
    ideal_vectors,
    qpermas_normalize,
    quotient_dim,
    specialize,
)
from .shuffles import Shuffle, shuffle_factorize, shuffle_of, sigma_of, staged_product, surjection_of_shuffle
from .surjections import (
    Surjection,
    compose,
    concat_words,
    corolla,
    enumerate_surjections,
    inverse,
    inversions,
    substitute,
)
from .trees import (
    LeveledTree,
    ShuffleLeftComb,
    comb_from_nested,
    comb_from_surjection,
    comb_to_nested,
    comb_to_surjection,
    strip_levels,
    tree_from_nested,
    tree_from_surjection,
    tree_to_nested,
    tree_to_surjection,
    validate_shuffle_tree,
)


class CheckFailed(Exception):
    """A named check found a counterexample; witness is JSON-serializable."""

    def __init__(self, witness: dict):
        super().__init__(str(witness))
        self.witness = witness


def _fail(**witness) -> None:
    raise CheckFailed({k: _plain(v) for k, v in witness.items()})


def _plain(x):
    """Strip library types down to JSON-friendly values."""
    if isinstance(x, Surjection):
        return list(x.values)
    if isinstance(x, DecoratedSurjection):
        return x.to_json()
    if isinstance(x, LinComb):
        return [{"coefficient": str(c), "element": _plain(k)} for k, c in x.terms()]
    if isinstance(x, (Shuffle, LeveledTree, ShuffleLeftComb)):
        return x.to_json()
    if isinstance(x, bruhat.Cover):
        return {
            "source": list(x.source),
            "i": x.i,
            "target": list(x.target),
            "kind": x.kind,
        }
    if isinstance(x, derivations.NCPoly):
        return x.to_json()
    if isinstance(x, QPoly):
        return str(x)
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    if isinstance(x, list):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


# ---------------------------------------------------------------------------
# Substitution monad.


def check_substitution_units(max_n: int) -> None:
    """Corollas act as identities on both sides of substitution."""
    for n in range(1, max_n + 1):
        for t in enumerate_surjections(n):
            into = substitute(corolla(n), (t,))
            parts = tuple(corolla(size) for size in t.preimage_sizes())
            under = substitute(t, parts)
            if into != t or under != t:
                _fail(check="substitution-units", t=t, into=into, under=under)


def check_substitution_associativity(max_n: int) -> None:
    """Two-stage substitution agrees with substituting composed parts.

    Exhaustive over outer shapes with up to max_n inputs and all choices of
    parts and sub-parts; the flattened sub-part list regroups by the target
    offsets of the parts.
    """
    for n in range(1, max_n + 1):
        for t in enumerate_surjections(n):
            part_choices = [
                enumerate_surjections(size) for size in t.preimage_sizes()
            ]
            for parts in itertools.product(*part_choices):
                mid = substitute(t, parts)
                sub_choices = [
                    enumerate_surjections(size) for size in mid.preimage_sizes()
                ]
                for subs in itertools.product(*sub_choices):
                    left = substitute(mid, subs)
                    offset = 0
                    composed = []
                    for part in parts:
                        chunk = subs[offset : offset + part.k]
                        composed.append(substitute(part, chunk))
                        offset += part.k
                    right = substitute(t, tuple(composed))
                    if left != right:
                        _fail(
                            check="substitution-associativity",
                            t=t,
                            parts=parts,
                            subs=subs,
                            left=left,
                            right=right,
                        )


def _arity_candidates(a: int) -> list:
    """One corolla generator per arity, plus a ladder of binary ones."""
    if a == 1:
        return [IDENTITY]
    out = [generator_element(f"g{a}", a)]
    if a >= 3:
        ladder = Surjection(tuple(range(1, a)))
        out.append(DecoratedSurjection(ladder, ("g2",) * (a - 1)))
    return out


def check_diamond(max_n: int) -> None:
    """Both bracketings through every three-vertex shape give one answer.

    Exhaustive over shapes whose composite arity is at most max_n, with
    generator and ladder elements at each vertex, plus one two-term
    combination to exercise multilinearity.
    """
    for n in range(3, max_n):
        for r in enumerate_surjections(n, 3):
            sizes = r.preimage_sizes()
            pools = [_arity_candidates(size + 1) for size in sizes]
            for nu, mu, lam in itertools.product(*pools):
                if not diamond_check(r, lam, mu, nu):
                    _fail(check="diamond", r=r, lam=lam, mu=mu, nu=nu)
    two = LinComb(
        {
            generator_element("g3", 3): 1,
            DecoratedSurjection(Surjection((1, 2)), ("g2", "g2")): 2,
        }
    )
    r = Surjection((3, 2, 1, 1))
    if not diamond_check(r, generator_element("g2", 2), generator_element("g2", 2), two):
        _fail(check="diamond", r=r, note="multilinearity case failed")


def check_sequential(max_n: int) -> None:
    """Disjoint-slot chains compose in either order.

    (lam o_i mu) o_{i-1+j} nu = lam o_i (mu o_j nu) for slots i of lam and
    j of mu, over one generator per arity including the arity-one identity.
    """
    for l in range(1, max_n):
        for m in range(1, max_n):
            for p in range(1, max_n):
                if l + m + p - 2 > max_n:
                    continue
                for lam, mu, nu in itertools.product(
                    _arity_candidates(l), _arity_candidates(m), _arity_candidates(p)
                ):
                    for i in range(1, l + 1):
                        for j in range(1, m + 1):
                            lhs = circ_i(circ_i(lam, mu, i), nu, i - 1 + j)
                            rhs = circ_i(lam, circ_i(mu, nu, j), i)
                            if lhs != rhs:
                                _fail(
                                    check="sequential-composition",
                                    arities=(l, m, p),
                                    i=i,
                                    j=j,
                                    lhs=lhs,
                                    rhs=rhs,
                                )


# ---------------------------------------------------------------------------
# Shuffles, unshuffles, tree encodings.


def check_unshuffle_substitution(max_n: int) -> None:
    """The unshuffle of a substitution is the blockwise product.

    sigma of substitute(t, parts) applies sigma_t first and then the
    unshuffles of the parts side by side, one block per vertex.
    """
    for n in range(1, max_n + 1):
        for t in enumerate_surjections(n):
            part_choices = [
                enumerate_surjections(size) for size in t.preimage_sizes()
            ]
            sigma_t = sigma_of(t).values
            for parts in itertools.product(*part_choices):
                lhs = sigma_of(substitute(t, parts)).values
                blockwise: tuple[int, ...] = ()
                for part in parts:
                    blockwise = concat_words(blockwise, sigma_of(part).values)
                rhs = compose(blockwise, sigma_t)
                if lhs != rhs:
                    _fail(
                        check="unshuffle-substitution",
                        t=t,
                        parts=parts,
                        lhs=list(lhs),
                        rhs=list(rhs),
                    )


def check_shuffle_factorization(max_n: int) -> None:
    """Binary factors recombine to the shuffle they were peeled from."""
    for n in range(1, max_n + 1):
        for t in enumerate_surjections(n):
            s = shuffle_of(t)
            factors = shuffle_factorize(s)
            if len(factors) != max(t.k - 1, 0):
                _fail(check="shuffle-factorization", t=t, factors=factors)
            sizes = t.preimage_sizes()
            for j, factor in enumerate(factors, start=1):
                head = sum(sizes[: t.k - j])
                if factor.blocks != (head, sizes[t.k - j]):
                    _fail(check="shuffle-factorization", t=t, factor=factor, j=j)
            if factors and staged_product(factors, s.blocks) != s:
                _fail(check="shuffle-factorization", t=t, factors=factors)


def check_encoding_roundtrips(max_n: int) -> None:
    """Surjection, shuffle, leveled tree and comb views agree pairwise."""
    for n in range(1, max_n + 1):
        for t in enumerate_surjections(n):
            s = shuffle_of(t)
            if surjection_of_shuffle(s) != t:
                _fail(check="encoding-roundtrips", via="shuffle", t=t)
            if sigma_of(t).values != inverse(s.perm):
                _fail(check="encoding-roundtrips", via="sigma", t=t)
            tr = tree_from_surjection(t)
            if tree_to_surjection(tr) != t:
                _fail(check="encoding-roundtrips", via="tree", t=t)
            nested = tree_to_nested(tr)
            if tree_from_nested(nested) != tr:
                _fail(check="encoding-roundtrips", via="tree-nested", t=t)
            if LeveledTree.from_json(tr.to_json()) != tr:
                _fail(check="encoding-roundtrips", via="tree-json", t=t)
            ok, _ = validate_shuffle_tree(strip_levels(nested))
            if not ok:
                _fail(check="encoding-roundtrips", via="shuffle-condition", t=t)
            c = comb_from_surjection(t)
            if comb_to_surjection(c) != t:
                _fail(check="encoding-roundtrips", via="comb", t=t)
            if comb_from_nested(comb_to_nested(c)) != c:
                _fail(check="encoding-roundtrips", via="comb-nested", t=t)
            if ShuffleLeftComb.from_json(c.to_json()) != c:
                _fail(check="encoding-roundtrips", via="comb-json", t=t)


GOLDEN_TABLE = [
    # values, blocks, perm, comb nested, leveled nested, sigma
    ((1,), (1,), (1,), [0, 1], [1, 0, 1], (1,)),
    ((1, 2), (1, 1), (1, 2), [[0, 1], 2], [2, [1, 0, 1], 2], (1, 2)),
    ((2, 1), (1, 1), (2, 1), [[0, 2], 1], [2, 0, [1, 1, 2]], (2, 1)),
    (
        (1, 2, 3),
        (1, 1, 1),
        (1, 2, 3),
        [[[0, 1], 2], 3],
        [3, [2, [1, 0, 1], 2], 3],
        (1, 2, 3),
    ),
    (
        (1, 1, 2),
        (2, 1),
        (1, 2, 3),
        [[0, 1, 2], 3],
        [2, [1, 0, 1, 2], 3],
        (1, 2, 3),
    ),
    (
        (1, 3, 2),
        (1, 1, 1),
        (1, 3, 2),
        [[[0, 1], 3], 2],
        [3, [1, 0, 1], [2, 2, 3]],
        (1, 3, 2),
    ),
    (
        (1, 2, 1),
        (2, 1),
        (1, 3, 2),
        [[0, 1, 3], 2],
        [2, [1, 0, 1], [1, 2, 3]],
        (1, 3, 2),
    ),
]


def check_golden_table() -> None:
    """Seven pinned rows tying all four encodings of one surjection together."""
    for values, blocks, perm, comb_nested, leveled, sigma in GOLDEN_TABLE:
        t = Surjection(values)
        s = shuffle_of(t)
        row = {"t": t}
        if (s.blocks, s.perm) != (blocks, perm):
            _fail(check="golden-table", **row, got=s, want_blocks=blocks, want_perm=perm)
        if comb_to_nested(comb_from_surjection(t)) != comb_nested:
            _fail(check="golden-table", **row, got=comb_to_nested(comb_from_surjection(t)))
        if tree_to_nested(tree_from_surjection(t)) != leveled:
            _fail(check="golden-table", **row, got=tree_to_nested(tree_from_surjection(t)))
        if sigma_of(t).values != sigma:
            _fail(check="golden-table", **row, got=list(sigma_of(t).values))


# ---------------------------------------------------------------------------
# Free and quotient dimensions.


def check_free_dimensions(max_n: int) -> None:
    """One binary generator gives (n-1)! basis elements in arity n.

    With a generator in every arity the basis matches the cells of the
    permutohedron one arity down, dimension by dimension.
    """
    magmatic, _ = PRESETS["permMag"]()
    for n in range(1, max_n + 1):
        count = len(free_basis(magmatic, n))
        expect = 1
        for m in range(1, n):
            expect *= m
        if count != expect:
            _fail(check="free-dimensions", preset="permMag", n=n, count=count, expect=expect)
    for n in range(2, max_n + 1):
        allgen = GeneratorSet({a: (f"m{a}",) for a in range(2, n + 1)})
        basis = free_basis(allgen, n)
        fv = chains.f_vector(n - 1)
        by_dim = [0] * len(fv)
        for d in basis:
            by_dim[d.t.dim] += 1
        if tuple(by_dim) != fv:
            _fail(check="free-dimensions", preset="all-arities", n=n, by_dim=by_dim, fv=list(fv))


def _binary_composites() -> list:
    """The ten arity-four expressions in a single binary generator."""
    out = []
    for a in (1, 2):
        for b in (1, 2, 3):
            out.append((("mu", a, "mu"), b, "mu"))
    for a in (1, 2):
        for b in (1, 2):
            out.append(("mu", a, ("mu", b, "mu")))
    return out


def check_binary_arity_four() -> None:
    """Ten magmatic composites in arity four fall into six classes.

    The four left-nested/right-nested identities hold on the nose and the
    remaining two left-nested composites stay alone.
    """
    composites = _binary_composites()
    if len(composites) != 10:
        _fail(check="binary-arity-four", count=len(composites))
    pairs = [
        ((("mu", 1, "mu"), 1, "mu"), ("mu", 1, ("mu", 1, "mu"))),
        ((("mu", 1, "mu"), 2, "mu"), ("mu", 1, ("mu", 2, "mu"))),
        ((("mu", 2, "mu"), 2, "mu"), ("mu", 2, ("mu", 1, "mu"))),
        ((("mu", 2, "mu"), 3, "mu"), ("mu", 2, ("mu", 2, "mu"))),
    ]
    for left, right in pairs:
        if binary_normal_form(left) != binary_normal_form(right):
            _fail(
                check="binary-arity-four",
                left=binary_normal_form(left),
                right=binary_normal_form(right),
            )
    classes: dict[DecoratedSurjection, list] = {}
    for expr in composites:
        classes.setdefault(binary_normal_form(expr), []).append(expr)
    if len(classes) != 6:
        _fail(check="binary-arity-four", classes=len(classes))
    singles = sorted(
        str(members[0]) for members in classes.values() if len(members) == 1
    )
    expect = sorted(
        [str((("mu", 2, "mu"), 1, "mu")), str((("mu", 1, "mu"), 3, "mu"))]
    )
    if singles != expect:
        _fail(check="binary-arity-four", singles=singles, expect=expect)


def check_q_normal_form(max_n: int) -> None:
    """Every monomial drops to q^(inversions) times the identity monomial.

    Cross-validated against the relation ideal: the difference of the
    monomial and its normal form must lie in the span of the relations,
    both symbolically and at q = -1; the symbolic quotient is a line.
    """
    qgens, qrels = PRESETS["qPermAs"]()
    for n in range(2, max_n + 1):
        vectors = ideal_vectors(qrels, qgens, n)
        basis = SpanBasis(vectors)
        identity = DecoratedSurjection(
            Surjection(tuple(range(1, n))), ("mu",) * (n - 1)
        )
        for d in free_basis(qgens, n):
            mono = qpermas_normalize(d)
            if mono.exponent != inversions(d.t.values):
                _fail(
                    check="q-normal-form",
                    element=d,
                    exponent=mono.exponent,
                    inversions=inversions(d.t.values),
                )
            diff = LinComb({d: QPoly.const(1)}) - LinComb(
                {identity: QPoly.q(mono.exponent)}
            )
            if not diff.is_zero() and not basis.in_span(diff):
                _fail(check="q-normal-form", element=d, note="not in relation ideal")
        if quotient_dim(qrels, qgens, n) != 1:
            _fail(check="q-normal-form", n=n, note="symbolic quotient not a line")
        minus_one = [specialize(v, -1) for v in vectors]
        dim = len(free_basis(qgens, n)) - span_rank(minus_one)
        if dim != 1:
            _fail(check="q-normal-form", n=n, q=-1, dim=dim)


def check_q_exponent_pins() -> None:
    """Two pinned ternary composites normalize to exponents one and two."""
    mu = generator_element("mu", 2)
    first = circ_i(circ_i(mu, mu, 2), mu, 1)
    second = circ_i(circ_i(mu, mu, 1), mu, 3)
    for expr, expect in ((first, 1), (second, 2)):
        terms = expr.terms()
        if len(terms) != 1:
            _fail(check="q-exponent-pins", terms=len(terms))
        mono = qpermas_normalize(terms[0][0])
        if mono.exponent != expect:
            _fail(
                check="q-exponent-pins",
                element=terms[0][0],
                exponent=mono.exponent,
                expect=expect,
            )


def check_associative_shuffle_dims() -> None:
    """The two-generator shuffle-associative quotient has dims 6 and 24."""
    gens, rels = PRESETS["permAsSh"]()
    if len(free_basis(gens, 4)) != 48:
        _fail(check="associative-shuffle-dims", free=len(free_basis(gens, 4)))
    for n, expect in ((3, 6), (4, 24)):
        dim = quotient_dim(rels, gens, n)
        if dim != expect:
            _fail(check="associative-shuffle-dims", n=n, dim=dim, expect=expect)


# ---------------------------------------------------------------------------
# Permutohedron complexes.


def check_f_vectors(max_n: int) -> None:
    """Cell counts per dimension: vertices n!, facets 2^n - 2, one top cell."""
    if chains.f_vector(3) != (6, 6, 1):
        _fail(check="permutohedron-f-vectors", n=3, got=list(chains.f_vector(3)))
    if chains.f_vector(4) != (24, 36, 14, 1):
        _fail(check="permutohedron-f-vectors", n=4, got=list(chains.f_vector(4)))
    for n in range(2, max_n + 1):
        fv = chains.f_vector(n)
        total = len(enumerate_surjections(n))
        facts = [0] * (n + 1)
        facts[0] = 1
        for m in range(1, n + 1):
            facts[m] = facts[m - 1] * m
        if fv[0] != facts[n] or fv[n - 2] != 2**n - 2 or fv[n - 1] != 1:
            _fail(check="permutohedron-f-vectors", n=n, got=list(fv))
        if sum(fv) != total:
            _fail(check="permutohedron-f-vectors", n=n, total=sum(fv), expect=total)


def check_boundary_squared(max_n: int) -> None:
    """The cellular differential squares to zero."""
    for n in range(2, max_n + 1):
        if not chains.double_boundary_vanishes(n):
            _fail(check="boundary-squared", n=n)


HEXAGON = {
    (1, 1, 2): 1,
    (2, 1, 2): 1,
    (2, 1, 1): 1,
    (1, 2, 2): -1,
    (1, 2, 1): -1,
    (2, 2, 1): -1,
}


def check_boundary_pins() -> None:
    """Pinned boundaries: the oriented hexagon and the arity-three interval."""
    hexagon = chains.boundary_of_top(3)
    want = LinComb({Surjection(v): c for v, c in HEXAGON.items()})
    if hexagon != want:
        _fail(check="boundary-pins", got=hexagon, want=want)
    interval = chains.boundary_of_top(2)
    want2 = LinComb({Surjection((2, 1)): 1, Surjection((1, 2)): -1})
    if interval != want2:
        _fail(check="boundary-pins", got=interval, want=want2)


def check_homology(max_n: int) -> None:
    """Each permutohedron complex has the homology of a point."""
    for n in range(1, max_n + 1):
        ranks = chains.homology_ranks(n)
        if ranks != (1,) + (0,) * (n - 1):
            _fail(check="homology-contractible", n=n, ranks=list(ranks))


def check_leibniz(max_n: int) -> None:
    """The differential is a derivation for grafting along every shape."""
    for m in range(2, max_n):
        for n in range(2, max_n):
            if m + n > max_n:
                continue
            if not chains.dg_leibniz_check(m, n):
                _fail(check="differential-leibniz", m=m, n=n)


def check_skeleton_covers(max_n: int) -> None:
    """Oriented skeleton edges are exactly the weak-order cover relations."""
    for n in range(2, max_n + 1):
        edges = {
            (u.values, v.values) for u, v in chains.skeleton_edges(n)
        }
        covers = {(c.source, c.target) for c in bruhat.cover_graph(n)}
        if edges != covers:
            _fail(
                check="skeleton-covers",
                n=n,
                extra=sorted(edges - covers),
                missing=sorted(covers - edges),
            )


# ---------------------------------------------------------------------------
# Weak order.


def check_bruhat(max_n: int) -> None:
    """Cover structure: lengths, the two kinds, connectivity, pinned paths."""
    for n in range(2, min(max_n, 6) + 1):
        for c in bruhat.cover_graph(n):
            if bruhat.length(c.target) != bruhat.length(c.source) + 1:
                _fail(check="bruhat-structure", cover=c)
            if bruhat.tree_rotation_kind(c.source, c.i) != c.kind:
                _fail(check="bruhat-structure", cover=c, note="kind mismatch")
    three = bruhat.cover_graph(3)
    type2 = [c for c in three if c.kind == 2]
    if len(three) != 6 or len(type2) != 1:
        _fail(check="bruhat-structure", covers=len(three), type2=len(type2))
    pin = type2[0]
    if (pin.source, pin.i, pin.target) != ((1, 3, 2), 1, (2, 3, 1)):
        _fail(check="bruhat-structure", cover=pin)
    want_path = [(1, 3, 2), (1, 2, 3), (2, 1, 3), (3, 1, 2), (3, 2, 1), (2, 3, 1)]
    if bruhat.admissible_path((1, 3, 2), 1) != want_path:
        _fail(check="bruhat-structure", path=bruhat.admissible_path((1, 3, 2), 1))
    for n in range(2, max_n + 1):
        connected, tree = bruhat.type1_connected(n)
        size = 1
        for m in range(1, n + 1):
            size *= m
        if not connected or len(tree) != size - 1:
            _fail(check="bruhat-structure", n=n, connected=connected, tree=len(tree))
    for n in range(2, min(max_n, 5) + 1):
        kind1 = {
            frozenset((c.source, c.target))
            for c in bruhat.cover_graph(n)
            if c.kind == 1
        }
        for c in bruhat.cover_graph(n):
            if c.kind != 2:
                continue
            path = bruhat.admissible_path(c.source, c.i)
            if path[0] != c.source or path[-1] != c.target:
                _fail(check="bruhat-structure", cover=c, path=path)
            for u, v in zip(path, path[1:]):
                if frozenset((u, v)) not in kind1:
                    _fail(check="bruhat-structure", cover=c, step=[list(u), list(v)])


# ---------------------------------------------------------------------------
# Associative algebras with derivation.


def check_derivation_relations() -> None:
    """Associativity, the Leibniz rule and the mixed exchange laws hold."""
    if not derivations.asder_relations_check():
        _fail(check="derivation-relations")


def check_derivation_monomials(max_n: int) -> None:
    """Iterated grafting of the derivation writes down the expected word."""
    for n in range(1, max_n + 1):
        for length in range(0, max_n + 1):
            for js in itertools.product(range(1, n + 1), repeat=length):
                poly = derivations.asder_monomial(js, n)
                want = derivations.NCPoly.monomial(js, n)
                if poly != want:
                    _fail(check="derivation-monomials", js=list(js), n=n, got=poly)


def check_derivation_diamond() -> None:
    """Nested two-step grafts satisfy the diamond; parallel ones are refused."""
    D = derivations.DERIVATION
    mu = derivations.MU
    elements = [D, mu, derivations.UNIT, derivations.NCPoly.monomial((1, 2), 2)]
    nested = parallel = 0
    for lam in elements:
        for m in elements:
            for nu in elements:
                total_lm = lam.nvars + m.nvars - 1
                for S in itertools.combinations(range(1, total_lm + 1), m.nvars):
                    total = total_lm + nu.nvars - 1
                    for T in itertools.combinations(range(1, total + 1), nu.nvars):
                        if derivations.graft_is_chain(lam.nvars, m.nvars, S, T):
                            if not derivations.asder_diamond_check(lam, m, nu, S, T):
                                _fail(
                                    check="derivation-diamond",
                                    S=list(S),
                                    T=list(T),
                                    note="nested graft orders disagree",
                                )
                            nested += 1
                        else:
                            try:
                                derivations.asder_diamond_check(lam, m, nu, S, T)
                            except ValueError:
                                parallel += 1
                            else:
                                _fail(
                                    check="derivation-diamond",
                                    S=list(S),
                                    T=list(T),
                                    note="parallel graft accepted",
                                )
    if nested == 0 or parallel == 0:
        _fail(check="derivation-diamond", nested=nested, parallel=parallel)
    left = derivations.asder_circ(derivations.asder_circ(mu, D, 1), D, 2)
    right = derivations.asder_circ(derivations.asder_circ(mu, D, 2), D, 1)
    if left == right:
        _fail(check="derivation-diamond", note="parallel grafts unexpectedly commute")


# ---------------------------------------------------------------------------
# Registry.


@dataclass(frozen=True)
class Check:
    """A named check, its default size bound and the hard cap it honors.

    Requests above the cap are clamped: bounds past it would push an
    exhaustive sweep into unreasonable territory.
    """

    name: str
    run: Callable
    default_n: int | None
    cap: int | None = None


CHECKS: tuple[Check, ...] = (
    Check("substitution-units", check_substitution_units, 6, 7),
    Check("substitution-associativity", check_substitution_associativity, 4, 4),
    Check("diamond", check_diamond, 6, 7),
    Check("sequential-composition", check_sequential, 6, 8),
    Check("unshuffle-substitution", check_unshuffle_substitution, 6, 6),
    Check("shuffle-factorization", check_shuffle_factorization, 6, 8),
    Check("encoding-roundtrips", check_encoding_roundtrips, 6, 8),
    Check("golden-table", check_golden_table, None),
    Check("free-dimensions", check_free_dimensions, 7, 8),
    Check("binary-arity-four", check_binary_arity_four, None),
    Check("q-normal-form", check_q_normal_form, 5, 6),
    Check("q-exponent-pins", check_q_exponent_pins, None),
    Check("associative-shuffle-dims", check_associative_shuffle_dims, None),
    Check("permutohedron-f-vectors", check_f_vectors, 6, 8),
    Check("boundary-squared", check_boundary_squared, 6, 7),
    Check("boundary-pins", check_boundary_pins, None),
    Check("homology-contractible", check_homology, 5, 6),
    Check("differential-leibniz", check_leibniz, 7, 8),
    Check("skeleton-covers", check_skeleton_covers, 5, 6),
    Check("bruhat-structure", check_bruhat, 7, 8),
    Check("derivation-relations", check_derivation_relations, None),
    Check("derivation-monomials", check_derivation_monomials, 4, 5),
    Check("derivation-diamond", check_derivation_diamond, None),
)


def bound_for(
    check: Check, max_n: int | None = None, ceiling: int | None = None
) -> int | None:
    """Requested or default bound, clamped by the check cap and a ceiling."""
    if check.default_n is None:
        return None
    bound = check.default_n if max_n is None else max_n
    if check.cap is not None:
        bound = min(bound, check.cap)
    if ceiling is not None:
        bound = min(bound, ceiling)
    return bound


def run_check(
    check: Check, max_n: int | None = None, ceiling: int | None = None
) -> int | None:
    """Run one check at the requested or default bound; return the bound."""
    bound = bound_for(check, max_n, ceiling)
    if bound is None:
        check.run()
    else:
        check.run(bound)
    return bound


def iter_checks(max_n: int | None = None, ceiling: int | None = None):
    """Yield (name, bound, witness-or-None) per check; stop at a failure."""
    for check in CHECKS:
        bound = bound_for(check, max_n, ceiling)
        try:
            run_check(check, max_n, ceiling)
        except CheckFailed as exc:
            yield check.name, bound, exc.witness
            return
        yield check.name, bound, None
