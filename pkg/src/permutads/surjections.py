"""Surjective maps n -> k and their substitution calculus.

A surjection is stored as its value sequence: a tuple ``values`` of length n
with entries in 1..k such that every target value occurs.  The target size k
is not stored; it is recovered as ``max(values)``.  The empty tuple encodes
the unit surjection (n = 0, k = 0), which is the neutral element for
concatenation and the arity-1 identity once surjections are read as
operations of arity n + 1.

Vertices are the target values 1..k, drawn as the levels of a tree with the
inputs of vertex j sitting at the positions of ``t.values`` equal to j.  The
operation arity of vertex j is one more than its preimage size.

Permutations appear throughout as plain value tuples ("words"): ``w[i - 1]``
is the image of i.  Helpers for words live at the bottom of the module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb


@dataclass(frozen=True, order=True)
class Surjection:
    """A surjective map from {1..n} onto {1..k}, encoded by its values.

    >>> t = Surjection((1, 2, 1))
    >>> t.n, t.k
    (3, 2)
    >>> t.preimage(1)
    (1, 3)
    >>> Surjection(())  # the unit
    Surjection(values=())
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        k = max(vals, default=0)
        if any(not isinstance(v, int) or v < 1 for v in vals):
            raise ValueError(f"values must be positive integers, got {vals}")
        if set(vals) != set(range(1, k + 1)):
            missing = sorted(set(range(1, k + 1)) - set(vals))
            raise ValueError(f"not surjective onto 1..{k}: missing {missing}")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def k(self) -> int:
        return max(self.values, default=0)

    @property
    def arity(self) -> int:
        """Operation arity when the surjection decorates a permutad element."""
        return self.n + 1

    @property
    def dim(self) -> int:
        """Cell dimension n - k inside the permutohedron of its arity."""
        return self.n - self.k

    def __call__(self, a: int) -> int:
        assert 1 <= a <= self.n
        return self.values[a - 1]

    def preimage(self, j: int) -> tuple[int, ...]:
        """Positions mapped to vertex j, in increasing order."""
        return tuple(a for a, v in enumerate(self.values, start=1) if v == j)

    def preimage_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.k
        for v in self.values:
            sizes[v - 1] += 1
        return tuple(sizes)

    def is_permutation(self) -> bool:
        return self.k == self.n

    def csv_key(self) -> str:
        """Dash-joined values, the basis key used in CSV exports."""
        return "-".join(str(v) for v in self.values)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "values": list(self.values)}

    @staticmethod
    def from_json(obj: dict) -> "Surjection":
        t = Surjection(tuple(obj["values"]))
        if "n" in obj and obj["n"] != t.n:
            raise ValueError(f"declared n={obj['n']} but {t.n} values given")
        if "k" in obj and obj["k"] != t.k:
            raise ValueError(f"declared k={obj['k']} but values reach {t.k}")
        return t


UNIT = Surjection(())


def corolla(n: int) -> Surjection:
    """The unique surjection n -> 1; the unit surjection when n = 0.

    >>> corolla(3).values
    (1, 1, 1)
    """
    if n < 0:
        raise ValueError(f"corolla needs n >= 0, got {n}")
    return Surjection((1,) * n)


def substitute(t: Surjection, parts: tuple[Surjection, ...]) -> Surjection:
    """Substitute one surjection into each vertex of t.

    ``parts[j - 1]`` replaces vertex j and must have exactly as many inputs
    as the preimage of j.  Position a of the result, with t(a) = j and a the
    b-th element of the preimage of j, is sent to the value of parts[j-1] at
    b, offset by the target sizes of the earlier parts.  The vertices of the
    result are therefore grouped part by part, vertex 1's part lowest.

    >>> substitute(Surjection((1, 2, 1)), (Surjection((2, 1)), Surjection((1,))))
    Surjection(values=(2, 3, 1))
    >>> substitute(corolla(3), (Surjection((1, 2, 1)),))
    Surjection(values=(1, 2, 1))
    """
    if len(parts) != t.k:
        raise ValueError(f"expected {t.k} parts, got {len(parts)}")
    sizes = t.preimage_sizes()
    for j, part in enumerate(parts, start=1):
        if part.n != sizes[j - 1]:
            raise ValueError(
                f"vertex {j}: part has {part.n} inputs, preimage size is {sizes[j - 1]}"
            )
    offsets = [0]
    for part in parts:
        offsets.append(offsets[-1] + part.k)
    counters = [0] * t.k
    out = []
    for v in t.values:
        b = counters[v - 1] = counters[v - 1] + 1
        out.append(offsets[v - 1] + parts[v - 1](b))
    return Surjection(tuple(out))


def concat(t: Surjection, w: Surjection) -> Surjection:
    """Concatenation t x w: place w to the right of t, vertices shifted by t.k.

    >>> concat(Surjection((2, 1)), Surjection((1, 1))).values
    (2, 1, 3, 3)
    >>> concat(UNIT, Surjection((1, 2))) == Surjection((1, 2))
    True
    """
    return Surjection(t.values + tuple(v + t.k for v in w.values))


def enumerate_surjections(n: int, k: int | None = None) -> list[Surjection]:
    """All surjections with n inputs, lexicographically sorted by values.

    With k given, only the maps onto {1..k}; otherwise every target size.

    >>> [t.values for t in enumerate_surjections(2)]
    [(1, 1), (1, 2), (2, 1)]
    >>> len(enumerate_surjections(3))
    13
    >>> enumerate_surjections(0)
    [Surjection(values=())]
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k is not None:
        if k == 0:
            return [UNIT] if n == 0 else []
        if not 1 <= k <= n:
            return []
        out = []
        for vals in itertools.product(range(1, k + 1), repeat=n):
            if len(set(vals)) == k:
                out.append(Surjection(vals))
        return out
    if n == 0:
        return [UNIT]
    out = []
    for kk in range(1, n + 1):
        out.extend(enumerate_surjections(n, kk))
    out.sort()
    return out


def count_surjections(n: int, k: int) -> int:
    """k! times the Stirling partition number, by inclusion-exclusion."""
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))


# ---------------------------------------------------------------------------
# Permutation words.  A word w of length n represents the bijection sending
# i to w[i - 1]; composition follows the usual convention (u * w)(x) = u(w(x)).

def identity_word(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def compose(u: tuple[int, ...], w: tuple[int, ...]) -> tuple[int, ...]:
    """Apply w first, then u.

    >>> compose((2, 1, 3), (3, 1, 2))
    (3, 2, 1)
    """
    assert len(u) == len(w)
    return tuple(u[x - 1] for x in w)


def inverse(w: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[v - 1] = i
    return tuple(out)


def concat_words(u: tuple[int, ...], w: tuple[int, ...]) -> tuple[int, ...]:
    """Block sum: u acting on the first positions, w shifted past them."""
    n = len(u)
    return u + tuple(v + n for v in w)


def inversions(w: tuple[int, ...]) -> int:
    """Number of pairs i < j with w(i) > w(j); the Coxeter length.

    >>> inversions((2, 3, 1))
    2
    """
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )


def word_sign(w: tuple[int, ...]) -> int:
    return -1 if inversions(w) % 2 else 1
