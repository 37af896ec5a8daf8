"""Integer partitions, compositions, set partitions and symmetric-group characters."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
SetPartition = tuple[tuple[int, ...], ...]


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def set_partitions(n: int) -> Iterator[SetPartition]:
    """Set partitions of [n], blocks sorted increasingly and ordered by minimum."""

    def rec(i: int, blocks: list[list[int]]):
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def canonical_set_partition(blocks) -> SetPartition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def sort_partition(parts: Sequence[int]) -> Partition:
    return tuple(sorted(parts, reverse=True))


def union(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    return sort_partition(tuple(lam) + tuple(mu))


def multiplicities(lam: Sequence[int]) -> Counter:
    return Counter(lam)


def z(lam: Sequence[int]) -> int:
    """Centralizer order prod_i i^{m_i} m_i!."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


def class_size(lam: Sequence[int]) -> int:
    return factorial(sum(lam)) // z(lam)


def sign(lam: Sequence[int]) -> int:
    return (-1) ** sum(p - 1 for p in lam)


def refinements(comp: Sequence[int]) -> Iterator[Composition]:
    """Compositions J refining comp (J finer than or equal to comp)."""
    if not comp:
        yield ()
        return
    for head in compositions(comp[0]):
        for tail in refinements(comp[1:]):
            yield head + tail


def hook_dimension(lam: Sequence[int]) -> int:
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(n) // hooks


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for x in beta if t < x < b)
        new_beta = tuple(sorted((occupied - {b}) | {t}, reverse=True))
        total += (-1) ** height * _mn(new_beta, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character chi^lam evaluated on cycle type mu (Murnaghan-Nakayama).

    Rim hooks are removed on the beta-set (abacus) of lam.
    """
    lam = sort_partition(p for p in lam if p)
    mu = sort_partition(p for p in mu if p)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    ell = len(lam)
    beta = tuple(lam[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, mu)
