"""Shuffles, unshuffles, and the factorization into binary shuffles.

An (i_1,...,i_k)-shuffle is a permutation word that increases on each
consecutive block of positions of sizes i_1,...,i_k.  Reading the sorted
preimages of a surjection t one vertex at a time produces such a word; that
word is the inverse of the unshuffle sigma_t returned by :func:`sigma_of`.
For the surjection (1,2,1,1,2) the preimages are {1,3,4} and {2,5}, the
shuffle is (1,3,4,2,5) and sigma_t = (1,4,2,3,5).

Every (i_1,...,i_k)-shuffle factors uniquely into k - 1 binary shuffles,
peeled off from the last block outward; :func:`shuffle_factorize` computes
the factors and :func:`staged_product` multiplies them back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surjections import (
    Surjection,
    compose,
    concat_words,
    identity_word,
    inverse,
)


def is_block_increasing(perm: tuple[int, ...], blocks: tuple[int, ...]) -> bool:
    pos = 0
    for size in blocks:
        seg = perm[pos : pos + size]
        if any(seg[i] >= seg[i + 1] for i in range(len(seg) - 1)):
            return False
        pos += size
    return pos == len(perm)


@dataclass(frozen=True, order=True)
class Shuffle:
    """A block-increasing permutation word together with its block sizes.

    >>> Shuffle((2, 1), (1, 3, 2)).perm
    (1, 3, 2)
    """

    blocks: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "perm", tuple(self.perm))
        if any(b < 1 for b in self.blocks):
            raise ValueError(f"block sizes must be positive, got {self.blocks}")
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"perm is not a permutation word: {self.perm}")
        if not is_block_increasing(self.perm, self.blocks):
            raise ValueError(
                f"perm {self.perm} is not increasing on blocks {self.blocks}"
            )

    @property
    def n(self) -> int:
        return len(self.perm)

    def to_json(self) -> dict:
        return {"blocks": list(self.blocks), "perm": list(self.perm)}

    @staticmethod
    def from_json(obj: dict) -> "Shuffle":
        return Shuffle(tuple(obj["blocks"]), tuple(obj["perm"]))


def shuffle_of(t: Surjection) -> Shuffle:
    """The block-increasing word listing each preimage of t in turn.

    >>> shuffle_of(Surjection((1, 2, 1, 1, 2))).perm
    (1, 3, 4, 2, 5)
    """
    word: list[int] = []
    for j in range(1, t.k + 1):
        word.extend(t.preimage(j))
    return Shuffle(t.preimage_sizes(), tuple(word))


def sigma_of(t: Surjection) -> Surjection:
    """The unshuffle sigma_t, inverse of the word built by shuffle_of.

    Permutations are their own unshuffle and corollas give the identity.

    >>> sigma_of(Surjection((1, 2, 1, 1, 2))).values
    (1, 4, 2, 3, 5)
    >>> sigma_of(Surjection((1, 1, 1))).values
    (1, 2, 3)
    """
    if t.n < 1:
        raise ValueError("sigma_of needs at least one input")
    return Surjection(inverse(shuffle_of(t).perm))


def surjection_of_shuffle(s: Shuffle) -> Surjection:
    """Inverse of shuffle_of: position p at block j means t(p) = j.

    >>> surjection_of_shuffle(shuffle_of(Surjection((2, 1, 2)))).values
    (2, 1, 2)
    """
    values = [0] * s.n
    pos = 0
    for j, size in enumerate(s.blocks, start=1):
        for p in s.perm[pos : pos + size]:
            values[p - 1] = j
        pos += size
    return Surjection(tuple(values))


def staged_product(factors: list[Shuffle], blocks: tuple[int, ...]) -> Shuffle:
    """Recombine binary factors into the (i_1,...,i_k)-shuffle they came from.

    The j-th factor acts on the first i_1 + ... + i_{k-j+1} points and is
    padded by the identity on the rest; factors are applied last to first.
    """
    n = sum(blocks)
    word = identity_word(n)
    for factor in reversed(factors):
        padded = concat_words(factor.perm, identity_word(n - factor.n))
        word = compose(padded, word)
    return Shuffle(blocks, word)


def shuffle_factorize(s: Shuffle) -> list[Shuffle]:
    """The unique binary factors of a block shuffle, outermost first.

    Factor j is an (i_1 + ... + i_{k-j}, i_{k-j+1})-shuffle.  Peeling: the
    outermost factor sends the last block of positions increasingly onto the
    image of the last block and the rest increasingly onto the complement;
    what remains fixes the tail and recurses on one block fewer.

    >>> [f.perm for f in shuffle_factorize(Shuffle((1, 1, 1), (2, 3, 1)))]
    [(2, 3, 1), (1, 2)]
    """
    factors: list[Shuffle] = []
    blocks = s.blocks
    word = s.perm
    while len(blocks) > 2:
        n = len(word)
        last = blocks[-1]
        image = sorted(word[n - last :])
        complement = sorted(set(range(1, n + 1)) - set(image))
        outer = [0] * n
        for p, v in enumerate(complement, start=1):
            outer[p - 1] = v
        for p, v in enumerate(image, start=1):
            outer[n - last + p - 1] = v
        outer_word = tuple(outer)
        factors.append(Shuffle((n - last, last), outer_word))
        rest = compose(inverse(outer_word), word)
        assert rest[n - last :] == tuple(range(n - last + 1, n + 1))
        word = rest[: n - last]
        blocks = blocks[:-1]
    if len(blocks) == 2:
        factors.append(Shuffle(blocks, word))
    return factors
