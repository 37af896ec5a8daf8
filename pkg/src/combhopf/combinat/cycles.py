"""Cycles of permutations, cyclic shuffles, matchings and circular standardization."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .words import Word, shuffle, standardize


@dataclass(frozen=True, order=True)
class Cycle:
    """A cyclic orbit ``elements[0] -> elements[1] -> ... -> elements[0]``.

    Stored with its minimal element first.
    """

    elements: tuple[int, ...]

    def __post_init__(self):
        e = tuple(self.elements)
        if not e:
            raise ValueError("empty cycle")
        if len(set(e)) != len(e):
            raise ValueError(f"repeated element in cycle {e}")
        i = e.index(min(e))
        object.__setattr__(self, "elements", e[i:] + e[:i])

    @classmethod
    def of(cls, *elements: int) -> "Cycle":
        return cls(tuple(elements))

    def __len__(self):
        return len(self.elements)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def minimum(self) -> int:
        return self.elements[0]

    def successor(self) -> dict[int, int]:
        e = self.elements
        return {a: e[(i + 1) % len(e)] for i, a in enumerate(e)}

    def words(self) -> set[Word]:
        """Cycle words: readings of successive images from each starting point."""
        e = self.elements
        return {e[i:] + e[:i] for i in range(len(e))}

    def shifted(self, k: int) -> "Cycle":
        return Cycle(tuple(a + k for a in self.elements))

    def relabel(self, mapping) -> "Cycle":
        return Cycle(tuple(mapping[a] for a in self.elements))

    def __str__(self):
        return "(" + ",".join(map(str, self.elements)) + ")"


CycleSet = tuple[Cycle, ...]


def canonical_cycle_set(cycles: Iterable[Cycle]) -> CycleSet:
    cs = tuple(sorted(cycles, key=lambda c: c.minimum))
    seen: set[int] = set()
    for c in cs:
        if seen & c.support:
            raise ValueError("cycles are not disjoint")
        seen |= c.support
    return cs


def cycle_decomposition(sigma: Sequence[int]) -> CycleSet:
    n = len(sigma)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        orbit = []
        a = start
        while not seen[a]:
            seen[a] = True
            orbit.append(a)
            a = sigma[a - 1]
        out.append(Cycle(tuple(orbit)))
    return tuple(out)


def cycle_words(c: Cycle) -> set[Word]:
    return c.words()


def permutation_from_cycles(cycles: Iterable[Cycle], n: int | None = None) -> Word:
    cycles = list(cycles)
    if n is None:
        n = sum(len(c) for c in cycles)
    out = list(range(1, n + 1))
    for c in cycles:
        for a, b in c.successor().items():
            out[a - 1] = b
    return tuple(out)


def cycle_type(sigma: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycle_decomposition(sigma)), reverse=True))


def csupp(sigma: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Set partition of [n] into cycle supports, blocks in lexicographic order."""
    return tuple(sorted(tuple(sorted(c.elements)) for c in cycle_decomposition(sigma)))


def ordered_cycle_type(sigma: Sequence[int]) -> tuple[int, ...]:
    return tuple(len(b) for b in csupp(sigma))


def cycle_from_word(w: Sequence[int]) -> Cycle:
    return Cycle(tuple(w))


def cyclic_shuffle(c1: Cycle | None, c2: Cycle | None) -> frozenset[Cycle]:
    """Cycles whose cycle words are shuffles of cycle words of c1 and c2."""
    if c1 is None and c2 is None:
        return frozenset()
    if c1 is None:
        return frozenset([c2])
    if c2 is None:
        return frozenset([c1])
    if c1.support & c2.support:
        raise ValueError("cyclic shuffle of overlapping cycles")
    # one rotation of c1 suffices: rotating c1's word only rotates the outputs
    u = c1.elements
    out = set()
    for v in c2.words():
        for w in shuffle(u, v):
            out.add(Cycle(w))
    return frozenset(out)


Matching = tuple[tuple[Cycle | None, Cycle | None], ...]


def matchings(C1: Sequence[Cycle], C2: Sequence[Cycle]) -> list[Matching]:
    """Partial bijections between cycles of C1 and cycles of C2.

    Each matching lists every cycle once, paired cycles as ``(c1, c2)`` and lone
    ones as ``(c1, None)`` / ``(None, c2)``.
    """
    C1 = canonical_cycle_set(C1)
    C2 = canonical_cycle_set(C2)
    if {a for c in C1 for a in c.elements} & {a for c in C2 for a in c.elements}:
        raise ValueError("matching of cycle sets with overlapping supports")
    out = []
    for k in range(min(len(C1), len(C2)) + 1):
        for left in combinations(range(len(C1)), k):
            for right in permutations(range(len(C2)), k):
                pairs = [(C1[i], C2[j]) for i, j in zip(left, right)]
                pairs += [(C1[i], None) for i in range(len(C1)) if i not in left]
                pairs += [(None, C2[j]) for j in range(len(C2)) if j not in right]
                out.append(tuple(pairs))
    return out


def matching_product(C1: Sequence[Cycle], C2: Sequence[Cycle]) -> set[CycleSet]:
    """C1 matched-shuffled with C2: union over matchings of choices of cyclic shuffles."""
    results: set[CycleSet] = set()
    for m in matchings(C1, C2):
        partial: list[list[Cycle]] = [[]]
        for a, b in m:
            options = cyclic_shuffle(a, b)
            partial = [p + [c] for p in partial for c in options]
        for p in partial:
            results.add(canonical_cycle_set(p))
    return results


def iterated_matching_product(cycle_sets: Sequence[Sequence[Cycle]]) -> set[CycleSet]:
    acc: set[CycleSet] = {()}
    for cs in cycle_sets:
        nxt: set[CycleSet] = set()
        for a in acc:
            nxt |= matching_product(a, cs)
        acc = nxt
    return acc


def min_rotation(w: Sequence[int]) -> Word:
    w = tuple(w)
    return min(w[i:] + w[:i] for i in range(len(w)))


def cstd(circular_words: Iterable[Sequence[int]]) -> Word:
    """Circular standardization of a multiset of circular words."""
    reps = sorted(min_rotation(w) for w in circular_words)
    if any(len(r) == 0 for r in reps):
        raise ValueError("empty circular word")
    concat = tuple(a for r in reps for a in r)
    sp = standardize(concat)
    cycles, i = [], 0
    for r in reps:
        cycles.append(Cycle(sp[i : i + len(r)]))
        i += len(r)
    return permutation_from_cycles(cycles, len(concat))
