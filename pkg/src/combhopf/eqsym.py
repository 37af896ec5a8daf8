"""EQSym (endofunctions, M basis) and its graded dual ESym (S basis)."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

import numpy as np

from . import accel
from .combinat.enumerate import enumerate_family
from .combinat.words import (
    Word,
    closed_subsets,
    deconcatenations,
    restrict,
    shifted_concat,
    shuffle_permutations,
)
from .element import Element, Tensor2

EQSYM = "EQSym"
ESYM = "ESym"


@lru_cache(maxsize=None)
def shuffle_array(n: int, m: int) -> np.ndarray:
    """Rows are the permutations in (1..n) shuffled with (n+1..n+m)."""
    perms = shuffle_permutations(n, m)
    return np.array(perms, dtype=np.int64).reshape(len(perms), n + m)


@lru_cache(maxsize=65536)
def structure_constants(f: Word, g: Word) -> tuple[tuple[Word, int], ...]:
    """C_{f,g}^h: count shuffles tau with h = tau^-1 o (f . g) o tau."""
    n, m = len(f), len(g)
    w = shifted_concat(f, g)
    if n == 0 or m == 0:
        return ((w, 1),)
    hs = accel.conjugate_by(np.array(w, dtype=np.int64), shuffle_array(n, m))
    counts = Counter(tuple(int(a) for a in row) for row in hs)
    return tuple(sorted(counts.items()))


def eqsym_product(f: Word, g: Word, algebra: str = EQSYM) -> Element:
    return Element(algebra, structure_constants(tuple(f), tuple(g)))


def eqsym_coproduct(h: Word, algebra: str = EQSYM) -> Tensor2:
    return Tensor2(algebra, [(pair, 1) for pair in deconcatenations(tuple(h))])


def esym_product(f: Word, g: Word) -> Element:
    return Element.basis(ESYM, shifted_concat(f, g))


@lru_cache(maxsize=65536)
def unshuffle_constants(h: Word) -> tuple[tuple[tuple[Word, Word], int], ...]:
    """Pairs (f, g) obtained by standardizing complementary f-stable position sets of h."""
    n = len(h)
    counts: Counter = Counter()
    for k in range(n + 1):
        for A in closed_subsets(h, k):
            B = tuple(i for i in range(n) if i not in A)
            counts[(restrict(h, A), restrict(h, B))] += 1
    return tuple(sorted(counts.items()))


def esym_coproduct(h: Word, algebra: str = ESYM) -> Tensor2:
    """Delta S^h = sum C_{f,g}^h S^f (x) S^g, read off h directly (no product table)."""
    return Tensor2(algebra, unshuffle_constants(tuple(h)))


def basis(n: int) -> list[Word]:
    return list(enumerate_family("endofunctions", n))


def connected_generators(n: int) -> list[Word]:
    return list(enumerate_family("connected_endofunctions", n))
