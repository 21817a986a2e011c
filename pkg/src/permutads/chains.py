"""Chain complexes of permutohedra under surjection substitution.

Cells of the permutohedron on n letters are the surjections defined on
{1..n}: the cell of t: n ->> k has dimension n - k, so the vertices are
the permutation words and the unique top cell is the constant word.  The
boundary of a face splits one level into two; the face obtained by
splitting level j of t along s: i ->> 2 enters with sign

    (-1)^(sum of (i_l - 1) over levels l < j) * sign(s),

where sign(s) for a two-level surjection is the sign of its unshuffle
permutation times (-1)^(size of the first level).  Substituting cells
into cells is again a cell and raises degree additively, which makes the
whole family of complexes a permutad in chain complexes; the interaction
of substitution with the boundary is the graded Leibniz rule exercised
by :func:`dg_leibniz_check`.

Degrees and arities are offset by one throughout the package: the
complex built from surjections with source n - 1 sits in arity n, and
grafting a and b of arities m and n along t: (m + n - 2) ->> 2 lands in
arity m + n - 1.
"""

from __future__ import annotations

from .linalg import LinComb, linear_extend, span_rank
from .shuffles import sigma_of
from .surjections import (
    Surjection,
    corolla,
    enumerate_surjections,
    substitute,
    word_sign,
)


def cells(n: int) -> list[Surjection]:
    """All cells of the permutohedron on n letters, top dimension first.

    Ordered by target size and then lexicographically, so vertices come
    last and the order is reproducible.
    """
    if n < 1:
        raise ValueError(f"need at least one letter, got n={n}")
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_surjections(n, k))
    return out


def cells_of_dim(n: int, d: int) -> list[Surjection]:
    if not 0 <= d <= n - 1:
        return []
    return enumerate_surjections(n, n - d)


def f_vector(n: int) -> tuple[int, ...]:
    """Face counts per dimension, starting at dimension zero.

    >>> f_vector(3)
    (6, 6, 1)
    >>> f_vector(4)
    (24, 36, 14, 1)
    """
    return tuple(len(cells_of_dim(n, d)) for d in range(n))


def vertex_coords(n: int) -> dict[Surjection, tuple[int, ...]]:
    """Embedding coordinates of the vertices: the word itself.

    The vertex cell for a permutation word sits at the point whose a-th
    coordinate is the value at a, which realises the polytope as the
    convex hull of the orbit of (1, .., n).
    """
    return {t: t.values for t in cells_of_dim(n, 0)}


def split_sign(s: Surjection) -> int:
    """Sign of a binary split, from its unshuffle and first-level size."""
    if s.k != 2:
        raise ValueError(f"split must have two levels, got {s.k}")
    return word_sign(sigma_of(s).values) * (-1) ** len(s.preimage(1))


def splittings(t: Surjection, j: int) -> list[tuple[int, Surjection]]:
    """Signed codimension-one faces obtained by splitting level j of t."""
    sizes = t.preimage_sizes()
    if sizes[j - 1] < 2:
        return []
    prefix = sum(i - 1 for i in sizes[: j - 1])
    out = []
    for s in enumerate_surjections(sizes[j - 1], 2):
        parts = tuple(
            s if l == j else corolla(sizes[l - 1]) for l in range(1, t.k + 1)
        )
        out.append(((-1) ** prefix * split_sign(s), substitute(t, parts)))
    return out


def boundary_of_cell(t: Surjection) -> LinComb:
    """Boundary of a single cell as a combination of its facets.

    >>> [(c, u.values) for u, c in boundary_of_cell(corolla(2)).terms()]
    [(-1, (1, 2)), (1, (2, 1))]
    """
    out: dict[Surjection, int] = {}
    for j in range(1, t.k + 1):
        for sign, face in splittings(t, j):
            out[face] = out.get(face, 0) + sign
    return LinComb(out)


def boundary_of_top(n: int) -> LinComb:
    """Boundary of the top cell; for n = 3 this is the oriented hexagon."""
    return boundary_of_cell(corolla(n))


def chain_boundary(v: LinComb) -> LinComb:
    return linear_extend(boundary_of_cell, v)


def double_boundary_vanishes(n: int) -> bool:
    """Check d(d(c)) = 0 on every cell of the permutohedron on n letters."""
    return all(chain_boundary(boundary_of_cell(t)).is_zero() for t in cells(n))


def homology_ranks(n: int) -> tuple[int, ...]:
    """Betti numbers per dimension over the rationals.

    Computed from exact ranks of the boundary families; a contractible
    polytope gives (1, 0, .., 0).

    >>> homology_ranks(3)
    (1, 0, 0)
    """
    ranks = [0] * (n + 1)
    for d in range(1, n):
        ranks[d] = span_rank(
            [boundary_of_cell(t) for t in cells_of_dim(n, d)]
        )
    fv = f_vector(n)
    return tuple(fv[d] - ranks[d] - ranks[d + 1] for d in range(n))


# ---------------------------------------------------------------------------
# Permutad structure on the family of complexes.


def cell_circ_t(a: Surjection, b: Surjection, t: Surjection) -> Surjection:
    """Graft cells a and b along a two-level shape, b at the first level.

    a and b have sources m - 1 and n - 1 when the ambient arities are m
    and n; t must then be a surjection (m + n - 2) ->> 2 whose first
    level has n - 1 elements.  Degrees add.
    """
    if t.k != 2:
        raise ValueError(f"grafting shape must have two levels, got {t.k}")
    return substitute(t, (b, a))


def chain_circ_t(a: LinComb, b: LinComb, t: Surjection) -> LinComb:
    """Bilinear extension of :func:`cell_circ_t`."""
    out = LinComb()
    for ka, ca in a.terms():
        for kb, cb in b.terms():
            out = out + LinComb.single(cell_circ_t(ka, kb, t), ca * cb)
    return out


def grafting_shapes(m: int, n: int) -> list[Surjection]:
    """Two-level shapes along which arities m and n can be grafted."""
    return [
        t
        for t in enumerate_surjections(m + n - 2, 2)
        if len(t.preimage(1)) == n - 1
    ]


def dg_leibniz_check(m: int, n: int, t: Surjection = None) -> bool:
    """Boundary against grafting: d(a o_t b) = a o_t db + (-1)^|b| da o_t b.

    Verified on every pair of basis cells of the complexes in arities m
    and n, for the given two-level shape or for all of them.
    """
    shapes = [t] if t is not None else grafting_shapes(m, n)
    for shape in shapes:
        for a in cells(m - 1):
            da = boundary_of_cell(a)
            for b in cells(n - 1):
                lhs = boundary_of_cell(cell_circ_t(a, b, shape))
                rhs = chain_circ_t(
                    LinComb.single(a), boundary_of_cell(b), shape
                ) + chain_circ_t(da, LinComb.single(b), shape).scale(
                    (-1) ** b.dim
                )
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# One-skeleton.


def skeleton_edges(n: int) -> list[tuple[Surjection, Surjection]]:
    """Oriented vertex pairs (u, v) with d(edge) = v - u, sorted."""
    out = []
    for e in cells_of_dim(n, 1):
        terms = boundary_of_cell(e).terms()
        assert len(terms) == 2
        (v0, c0), (v1, c1) = terms
        assert {c0, c1} == {1, -1}
        out.append((v0, v1) if c0 == -1 else (v1, v0))
    return sorted(out)


def skeleton_dot(n: int) -> str:
    """The one-skeleton in DOT form, vertices labelled by coordinates."""
    coords = vertex_coords(n)

    def node_id(t: Surjection) -> str:
        return "v" + "_".join(str(x) for x in t.values)

    lines = [f"graph permutohedron{n} {{"]
    for t in sorted(coords):
        label = " ".join(str(x) for x in coords[t])
        lines.append(f'  {node_id(t)} [label="{label}"];')
    for u, v in skeleton_edges(n):
        lines.append(f"  {node_id(u)} -- {node_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
