"""The free permutad on a generator set, with ideals and quotients.

Elements are formal combinations of decorated surjections: a surjection t
with n inputs carries one generator of arity (preimage size + 1) per vertex
and represents an operation of arity n + 1.  The empty surjection with no
decorations is the arity-1 identity.

The structure map :func:`gamma` substitutes one argument element into each
vertex of an outer surjection; partial compositions are the two-vertex
special case, with the second operand placed at vertex 1 (the lower level
block of the result).  Quotients are handled degree-wise: the arity-n
component of the ideal generated by homogeneous relations is spanned by all
gamma composites with exactly one slot fed by a relation, every other slot
fed by a free basis element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import LinComb, QPoly, SpanBasis, qpoly_parse
from .surjections import (
    Surjection,
    UNIT,
    corolla,
    enumerate_surjections,
    inversions,
    substitute,
)


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered generator names per arity.

    Arity-1 generators mark the extended setting (operations with unary
    vertices); they are only admitted with ``extended=True`` and are never
    enumerated into free bases, which would be infinite over weak level
    maps.

    >>> GeneratorSet({2: ("mu",)}).names_of_arity(2)
    ('mu',)
    """

    by_arity: tuple[tuple[int, tuple[str, ...]], ...]
    extended: bool = False

    def __init__(self, by_arity, extended: bool = False) -> None:
        if isinstance(by_arity, dict):
            items = tuple(sorted((a, tuple(names)) for a, names in by_arity.items()))
        else:
            items = tuple((a, tuple(names)) for a, names in by_arity)
        object.__setattr__(self, "by_arity", items)
        object.__setattr__(self, "extended", extended)
        for a, names in items:
            if a < 1:
                raise ValueError(f"generator arity must be >= 1, got {a}")
            if a == 1 and not extended:
                raise ValueError("arity-1 generators need the extended flag")
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate generator names at arity {a}: {names}")

    def names_of_arity(self, a: int) -> tuple[str, ...]:
        for arity, names in self.by_arity:
            if arity == a:
                return names
        return ()

    def arities(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.by_arity)


@dataclass(frozen=True, order=True)
class DecoratedSurjection:
    """A surjection with one generator name per vertex; arity is inputs + 1."""

    t: Surjection
    decorations: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "decorations", tuple(self.decorations))
        if len(self.decorations) != self.t.k:
            raise ValueError(
                f"{self.t.k} vertices but {len(self.decorations)} decorations"
            )

    @property
    def arity(self) -> int:
        return self.t.n + 1

    def csv_key(self) -> str:
        return f"{self.t.csv_key()}:{'.'.join(self.decorations)}"

    def to_json(self) -> dict:
        return {"surjection": self.t.to_json(), "decorations": list(self.decorations)}

    @staticmethod
    def from_json(obj: dict) -> "DecoratedSurjection":
        return DecoratedSurjection(
            Surjection.from_json(obj["surjection"]), tuple(obj["decorations"])
        )


IDENTITY = DecoratedSurjection(UNIT, ())


def generator_element(name: str, arity: int) -> DecoratedSurjection:
    """The one-vertex element of a generator: a decorated corolla."""
    if arity < 2:
        raise ValueError(f"generator elements need arity >= 2, got {arity}")
    return DecoratedSurjection(corolla(arity - 1), (name,))


def validate_decorated(d: DecoratedSurjection, M: GeneratorSet) -> None:
    for j, size in enumerate(d.t.preimage_sizes(), start=1):
        name = d.decorations[j - 1]
        if name not in M.names_of_arity(size + 1):
            raise ValueError(
                f"vertex {j}: no generator {name!r} of arity {size + 1}"
            )


def _as_lincomb(x) -> LinComb:
    if isinstance(x, LinComb):
        return x
    if isinstance(x, DecoratedSurjection):
        return LinComb.single(x)
    raise TypeError(f"expected LinComb or DecoratedSurjection, got {type(x)!r}")


def arity_of(v) -> int:
    """Common arity of a homogeneous combination (or a single element)."""
    if isinstance(v, DecoratedSurjection):
        return v.arity
    arities = {d.arity for d, _ in v.terms()}
    if len(arities) != 1:
        raise ValueError(f"not homogeneous in arity: {sorted(arities)}")
    return arities.pop()


def gamma(t: Surjection, args) -> LinComb:
    """Multilinear substitution of one argument per vertex of t.

    >>> mu = generator_element("mu", 2)
    >>> gamma(Surjection((2, 1)), [mu, mu]).terms()[0][0].t
    Surjection(values=(2, 1))
    """
    args = [_as_lincomb(a) for a in args]
    if len(args) != t.k:
        raise ValueError(f"expected {t.k} arguments, got {len(args)}")
    sizes = t.preimage_sizes()
    for j, arg in enumerate(args, start=1):
        for d, _ in arg.terms():
            if d.arity != sizes[j - 1] + 1:
                raise ValueError(
                    f"vertex {j}: argument arity {d.arity}, expected {sizes[j - 1] + 1}"
                )
    acc: dict[DecoratedSurjection, object] = {}
    for combo in itertools.product(*(arg.terms() for arg in args)):
        coeff = 1
        for _, c in combo:
            coeff = coeff * c
        flat = substitute(t, tuple(d.t for d, _ in combo))
        decorations = tuple(
            name for d, _ in combo for name in d.decorations
        )
        key = DecoratedSurjection(flat, decorations)
        acc[key] = acc.get(key, 0) + coeff
    return LinComb(acc)


def circ_t(a, b, t: Surjection) -> LinComb:
    """Partial composition along a two-vertex surjection: b joins vertex 1."""
    if t.k != 2:
        raise ValueError(f"circ_t needs a surjection onto two vertices, k={t.k}")
    return gamma(t, [b, a])


def circ_i(a, b, i: int) -> LinComb:
    """Classic partial composition a at slot i of b ... of b at slot i of a.

    Builds the two-vertex surjection whose vertex 1 block is the i-th run of
    inputs; compositions with the arity-1 identity short-circuit.

    >>> mu = generator_element("mu", 2)
    >>> circ_i(mu, mu, 2).terms()[0][0].t.values
    (2, 1)
    """
    a = _as_lincomb(a)
    b = _as_lincomb(b)
    alpha = arity_of(a)
    beta = arity_of(b)
    if not 1 <= i <= alpha:
        raise ValueError(f"slot {i} out of range for arity {alpha}")
    if beta == 1:
        scalar = b.get(IDENTITY)
        return a.scale(scalar)
    if alpha == 1:
        return b.scale(a.get(IDENTITY))
    values = tuple(
        1 if i <= x <= i + beta - 2 else 2 for x in range(1, alpha + beta - 1)
    )
    return circ_t(a, b, Surjection(values))


def diamond_check(r: Surjection, lam, mu, nu) -> bool:
    """Both bracketings through a three-vertex shape agree with gamma.

    The shape r puts nu at vertex 1, mu at vertex 2, lam at vertex 3; the
    left bracketing composes lam with mu first, the right one mu with nu.
    """
    if r.k != 3:
        raise ValueError(f"diamond needs a surjection onto three vertices, k={r.k}")
    t = Surjection(tuple(1 if v == 1 else 2 for v in r.values))
    s = Surjection(tuple(v - 1 for v in r.values if v >= 2))
    u = Surjection(tuple(1 if v <= 2 else 2 for v in r.values))
    v = Surjection(tuple(x for x in r.values if x <= 2))
    left = circ_t(circ_t(lam, mu, s), nu, t)
    right = circ_t(lam, circ_t(mu, nu, v), u)
    direct = gamma(r, [nu, mu, lam])
    return left == right == direct


def free_basis(M: GeneratorSet, n: int) -> list[DecoratedSurjection]:
    """All decorated surjections of arity n, surjection then decoration order.

    >>> len(free_basis(GeneratorSet({2: ("mu",)}), 4))
    6
    """
    if n < 1:
        raise ValueError(f"arity must be >= 1, got {n}")
    if M.extended:
        raise ValueError("free bases over extended generator sets are infinite")
    if n == 1:
        return [IDENTITY]
    out = []
    for t in enumerate_surjections(n - 1):
        choices = [M.names_of_arity(size + 1) for size in t.preimage_sizes()]
        if any(not names for names in choices):
            continue
        for decorations in itertools.product(*choices):
            out.append(DecoratedSurjection(t, decorations))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Relations, ideals, quotients.

def relation_arity(rel: LinComb) -> int:
    return arity_of(rel)


def relation_to_json(rel: LinComb) -> list[dict]:
    return [
        {"coefficient": str(c), "element": d.to_json()} for d, c in rel.terms()
    ]


def relation_from_json(obj: list[dict]) -> LinComb:
    acc = LinComb()
    for pair in obj:
        raw = pair["coefficient"]
        try:
            coeff = Fraction(raw)
        except ValueError:
            coeff = qpoly_parse(raw)
        acc = acc + LinComb.single(
            DecoratedSurjection.from_json(pair["element"]), coeff
        )
    # Plain constants parse as rationals; keep one coefficient domain.
    if _uses_q([acc]):
        acc = _to_q([acc])[0]
    return acc


def _uses_q(vectors) -> bool:
    return any(isinstance(c, QPoly) for v in vectors for _, c in v.terms())


def _to_q(vectors) -> list[LinComb]:
    return [
        v.map_coeffs(lambda c: c if isinstance(c, QPoly) else QPoly.const(c))
        for v in vectors
    ]


def ideal_vectors(relations, M: GeneratorSet, n: int) -> list[LinComb]:
    """Spanning vectors of the arity-n ideal component, in deterministic order.

    One slot of each outer shape receives a relation, the rest free basis
    elements; nested composites are covered by associativity of gamma.
    """
    basis_cache: dict[int, list[DecoratedSurjection]] = {}

    def basis(a: int) -> list[DecoratedSurjection]:
        if a not in basis_cache:
            basis_cache[a] = free_basis(M, a)
        return basis_cache[a]

    vectors: list[LinComb] = []
    for rel in relations:
        r_arity = relation_arity(rel)
        for t in enumerate_surjections(n - 1):
            sizes = t.preimage_sizes()
            for hot in range(t.k):
                if sizes[hot] + 1 != r_arity:
                    continue
                pools = [
                    [rel] if j == hot else basis(sizes[j] + 1)
                    for j in range(t.k)
                ]
                if any(not pool for pool in pools):
                    continue
                for slots in itertools.product(*pools):
                    vectors.append(gamma(t, list(slots)))
    if _uses_q(vectors):
        vectors = _to_q(vectors)
    return vectors


def ideal_component(relations, M: GeneratorSet, n: int) -> SpanBasis:
    return SpanBasis(ideal_vectors(relations, M, n))


def quotient_dim(relations, M: GeneratorSet, n: int) -> int:
    return len(free_basis(M, n)) - ideal_component(relations, M, n).rank


def specialize(v: LinComb, value) -> LinComb:
    """Ring map sending q to a rational value, applied coefficient-wise."""
    value = Fraction(value)
    return v.map_coeffs(
        lambda c: c.evaluate(value) if isinstance(c, QPoly) else Fraction(c)
    )


# ---------------------------------------------------------------------------
# The q-associative quotient of the free binary permutad.

@dataclass(frozen=True)
class QMonomial:
    """q^exponent times the arity-n normal form of the q-associative quotient."""

    exponent: int


def qpermas_relation() -> LinComb:
    """mu at slot 2 of mu, minus q times mu at slot 1 of mu."""
    mu = generator_element("mu", 2)
    upper = circ_i(mu, mu, 2).map_coeffs(QPoly.const)
    lower = circ_i(mu, mu, 1).map_coeffs(QPoly.const)
    return upper - lower.scale(QPoly.q())


def qpermas_normalize(d: DecoratedSurjection) -> QMonomial:
    """Exponent of the basis element in the q-associative quotient.

    Every all-mu decorated permutation equals q to its inversion count times
    the identity-permutation element.

    >>> qpermas_normalize(DecoratedSurjection(Surjection((2, 3, 1)), ("mu",) * 3))
    QMonomial(exponent=2)
    """
    if not d.t.is_permutation() or any(name != "mu" for name in d.decorations):
        raise ValueError(f"not an all-mu decorated permutation: {d}")
    return QMonomial(inversions(d.t.values))


def binary_normal_form(expr, generator: str = "mu") -> DecoratedSurjection:
    """Evaluate a nested partial-composition expression of one binary generator.

    Expressions are the generator name itself or triples (left, slot, right)
    meaning ``left composed with right at slot``.  The value is always a
    single decorated permutation, the leveled-binary-tree basis element.

    >>> binary_normal_form((("mu", 2, "mu"), 1, "mu")).t.values
    (1, 3, 2)
    """
    def evaluate(e) -> LinComb:
        if isinstance(e, str):
            if e != generator:
                raise ValueError(f"unknown generator {e!r}")
            return LinComb.single(generator_element(generator, 2))
        if not (isinstance(e, tuple) and len(e) == 3):
            raise ValueError(f"malformed expression node: {e!r}")
        left, slot, right = e
        return circ_i(evaluate(left), evaluate(right), slot)

    value = evaluate(expr)
    terms = value.terms()
    assert len(terms) == 1 and terms[0][1] == 1
    return terms[0][0]


# ---------------------------------------------------------------------------
# Ready-made presets.

def preset_permmag() -> tuple[GeneratorSet, list[LinComb]]:
    """Free permutad on a single binary generator; no relations."""
    return GeneratorSet({2: ("mu",)}), []


def preset_qpermas() -> tuple[GeneratorSet, list[LinComb]]:
    """One binary generator with the q-associativity relation."""
    return GeneratorSet({2: ("mu",)}), [qpermas_relation()]


def preset_permassh() -> tuple[GeneratorSet, list[LinComb]]:
    """Two binary generators with the interchange relations of the shuffle
    analogue of the associative permutad."""
    M = GeneratorSet({2: ("one", "tau")})
    one = generator_element("one", 2)
    tau = generator_element("tau", 2)
    rel_a = circ_i(tau, one, 1) - circ_i(one, tau, 2)
    rel_b = circ_i(one, tau, 1) - circ_i(tau, one, 2)
    return M, [rel_a, rel_b]


PRESETS = {
    "permMag": preset_permmag,
    "qPermAs": preset_qpermas,
    "permAsSh": preset_permassh,
}
