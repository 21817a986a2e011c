"""Weak Bruhat order on permutations and its two kinds of covers.

Permutations are one-line words, tuples of the values 1..n.  A cover
exchanges the values i and i+1 when i occurs to the left of i+1, which
raises the inversion count by exactly one.  Covers split into two kinds
by what sits between those occurrences: kind 1 when every intermediate
value is below i, kind 2 when some intermediate value exceeds i+1 (one
of the two always holds, since nothing in between can equal i or i+1).

Kind-1 covers are the moves that rotate a single edge of the underlying
unlabelled binary tree; kind-2 covers permute the levels of two vertices
that are not adjacent, leaving the tree untouched.  The graph on all
permutations with kind-1 covers as edges is connected, which is checked
here by search and certified by a spanning tree; paths in that graph are
the admissible-move sequences used elsewhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .surjections import inversions


def _check_word(word: tuple[int, ...]) -> None:
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation word: {word!r}")


def length(word: tuple[int, ...]) -> int:
    """Coxeter length, the inversion count.

    >>> length((4, 3, 2, 1))
    6
    """
    _check_word(word)
    return inversions(word)


def coxeter_apply(word: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Exchange the values i and i+1 in the one-line word."""
    if not 1 <= i <= len(word) - 1:
        raise ValueError(f"index {i} out of range for a word of {len(word)}")
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(x, x) for x in word)


@dataclass(frozen=True, order=True)
class Cover:
    """A length-raising exchange of consecutive values, classified."""

    source: tuple[int, ...]
    i: int
    target: tuple[int, ...]
    kind: int


def cover_kind(word: tuple[int, ...], i: int) -> int:
    """1 when all values between i and i+1 stay below i, else 2."""
    p, q = word.index(i), word.index(i + 1)
    if not p < q:
        raise ValueError(f"{i} does not precede {i + 1} in {word!r}")
    return 1 if all(word[j] < i for j in range(p + 1, q)) else 2


def covers(word: tuple[int, ...]) -> list[Cover]:
    """All covers of the word in the weak order, by ascending index.

    >>> [c.kind for c in covers((1, 3, 2))]
    [2]
    """
    _check_word(word)
    out = []
    for i in range(1, len(word)):
        if word.index(i) < word.index(i + 1):
            out.append(
                Cover(word, i, coxeter_apply(word, i), cover_kind(word, i))
            )
    return out


def all_words(n: int) -> list[tuple[int, ...]]:
    if n < 1:
        raise ValueError(f"need at least one letter, got n={n}")
    return sorted(itertools.permutations(range(1, n + 1)))


def cover_graph(n: int) -> list[Cover]:
    """Every cover of the weak order on n letters, sorted."""
    return [c for word in all_words(n) for c in covers(word)]


def tree_rotation_kind(word: tuple[int, ...], i: int) -> int:
    """Classify a cover by adjacency in the underlying binary tree.

    The word builds a binary tree by merging, level by level, the two
    clusters of leaves flanking the gap at each level's position.  The
    exchange of levels i and i+1 rotates an edge of that tree precisely
    when the vertex made at level i is a child of the one made at level
    i+1; otherwise the two merges commute and the tree is unchanged.
    Independent of :func:`cover_kind`, and in agreement with it.
    """
    p, q = word.index(i), word.index(i + 1)
    if not p < q:
        raise ValueError(f"{i} does not precede {i + 1} in {word!r}")
    n = len(word)
    cluster = list(range(n + 1))
    made_at: dict[int, int] = {}
    for level in range(1, i + 1):
        gap = word.index(level) + 1
        left, right = cluster[gap - 1], cluster[gap]
        vertex = n + 1 + level
        made_at[level] = vertex
        for leaf in range(n + 1):
            if cluster[leaf] in (left, right):
                cluster[leaf] = vertex
    gap = word.index(i + 1) + 1
    merged = {cluster[gap - 1], cluster[gap]}
    return 1 if made_at[i] in merged else 2


def type1_connected(n: int) -> tuple[bool, list[Cover]]:
    """Whether kind-1 covers connect all words, with a spanning tree.

    Search runs over the undirected kind-1 edges from the identity; the
    returned covers each attach one new word, so they form a spanning
    tree of the identity's component exactly when the flag is true.
    """
    words = all_words(n)
    adjacency: dict[tuple[int, ...], list[tuple[Cover, tuple[int, ...]]]] = {
        w: [] for w in words
    }
    for c in cover_graph(n):
        if c.kind == 1:
            adjacency[c.source].append((c, c.target))
            adjacency[c.target].append((c, c.source))
    root = words[0]
    seen = {root}
    tree: list[Cover] = []
    frontier = [root]
    while frontier:
        nxt = []
        for w in frontier:
            for c, other in sorted(adjacency[w]):
                if other not in seen:
                    seen.add(other)
                    tree.append(c)
                    nxt.append(other)
        frontier = sorted(nxt)
    return len(seen) == len(words), tree


def admissible_path(
    word: tuple[int, ...], i: int
) -> list[tuple[int, ...]]:
    """A kind-1 path from the word to its cover target, as word list.

    Steps may traverse kind-1 covers in either direction.  Breadth-first
    search with sorted frontiers keeps the output reproducible.

    >>> admissible_path((1, 3, 2), 1)  # doctest: +NORMALIZE_WHITESPACE
    [(1, 3, 2), (1, 2, 3), (2, 1, 3), (3, 1, 2), (3, 2, 1), (2, 3, 1)]
    """
    _check_word(word)
    target = coxeter_apply(word, i)
    if not word.index(i) < word.index(i + 1):
        raise ValueError(f"{i} does not precede {i + 1} in {word!r}")
    adjacency: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for c in cover_graph(len(word)):
        if c.kind == 1:
            adjacency.setdefault(c.source, set()).add(c.target)
            adjacency.setdefault(c.target, set()).add(c.source)
    parent = {word: None}
    frontier = [word]
    while frontier and target not in parent:
        nxt = []
        for w in frontier:
            for other in sorted(adjacency.get(w, ())):
                if other not in parent:
                    parent[other] = w
                    nxt.append(other)
        frontier = sorted(nxt)
    if target not in parent:
        raise RuntimeError(f"no kind-1 path from {word!r} to {target!r}")
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def bruhat_dot(n: int, type1_only: bool = False) -> str:
    """Cover graph in DOT form; kind-1 edges solid, kind-2 dotted."""

    def node_id(word: tuple[int, ...]) -> str:
        return "p" + "_".join(str(x) for x in word)

    lines = [f"digraph bruhat{n} {{"]
    for word in all_words(n):
        label = " ".join(str(x) for x in word)
        lines.append(f'  {node_id(word)} [label="{label}"];')
    for c in cover_graph(n):
        if type1_only and c.kind != 1:
            continue
        style = "solid" if c.kind == 1 else "dotted"
        lines.append(
            f"  {node_id(c.source)} -> {node_id(c.target)} [style={style}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
