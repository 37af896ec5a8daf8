"""Commuting variables x_ij modulo monomial relation ideals.

A monomial is a sorted tuple of (row, column) pairs with pairwise distinct rows
(x_ij x_ik = 0).  Optional modes add further monomial relations:

* ``column``: x_ik x_jk = 0 (distinct columns);
* ``order``:  x_ij x_kl = 0 for i < k and j > l;
* ``chain``:  x_ij x_jk = 0 for i != k.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from ..element import Element
from ..scalar import normalize

Monomial = tuple[tuple[int, int], ...]
Poly = dict

MODES = ("column", "order", "chain")


def _admissible(mono: Monomial, modes: frozenset[str]) -> bool:
    rows = [i for i, _ in mono]
    if len(set(rows)) != len(rows):
        return False
    if "column" in modes:
        cols = [j for _, j in mono]
        if len(set(cols)) != len(cols):
            return False
    if "order" in modes:
        # pairs are sorted by row; columns must be weakly increasing
        cols = [j for _, j in mono]
        if any(a > b for a, b in zip(cols, cols[1:])):
            return False
    if "chain" in modes:
        succ = dict(mono)
        for i, j in mono:
            k = succ.get(j)
            if k is not None and k != i:
                return False
    return True


def poly_add(p: Poly, q: Poly, scale=1) -> Poly:
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + scale * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_mul(p: Poly, q: Poly, modes: Iterable[str] = ()) -> Poly:
    modes = frozenset(modes)
    out: Poly = defaultdict(int)
    for m1, c1 in p.items():
        rows1 = {i for i, _ in m1}
        for m2, c2 in q.items():
            if any(i in rows1 for i, _ in m2):
                continue
            mono = tuple(sorted(m1 + m2))
            if _admissible(mono, modes):
                out[mono] += c1 * c2
    return {m: normalize(c) for m, c in out.items() if c}


def poly_scale(p: Poly, c) -> Poly:
    return {m: normalize(v * c) for m, v in p.items() if v * c}


def expand_M(f: Sequence[int], modes: Iterable[str] = (), N: int = 8) -> Poly:
    """M_f = sum_{i_1<...<i_n} x_{i_1 i_f(1)} ... x_{i_n i_f(n)} in the quotient."""
    modes = frozenset(modes)
    f = tuple(f)
    n = len(f)
    if n == 0:
        return {(): 1}
    out: Poly = {}
    for rows in combinations(range(1, N + 1), n):
        mono = tuple((rows[k], rows[f[k] - 1]) for k in range(n))
        if _admissible(mono, modes):
            out[mono] = out.get(mono, 0) + 1
    return out


def identify(mono: Monomial) -> tuple[int, ...] | None:
    """The endofunction f with mono a term of M_f, or None if columns leave the row set."""
    rows = [i for i, _ in mono]
    rank = {r: k for k, r in enumerate(rows, 1)}
    try:
        return tuple(rank[j] for _, j in mono)
    except KeyError:
        return None


@dataclass
class Reidentification:
    element: Element | None
    leftover: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.element is not None and not self.leftover


def reidentify(p: Poly, algebra: str, modes: Iterable[str] = (), N: int = 8) -> Reidentification:
    """Write p as a combination of M_f; the whole polynomial must be consumed."""
    modes = frozenset(modes)
    groups: dict = defaultdict(dict)
    leftover = []
    for mono, c in p.items():
        f = identify(mono)
        if f is None:
            leftover.append((mono, c))
        else:
            groups[f][mono] = c
    terms = {}
    for f, monos in groups.items():
        support = expand_M(f, modes, N)
        coeffs = {monos.get(m, 0) for m in support}
        if len(coeffs) != 1 or set(monos) - set(support):
            leftover.append((f, sorted(map(str, coeffs))))
            continue
        c = coeffs.pop()
        if c:
            terms[f] = c
    return Reidentification(Element(algebra, terms), leftover)
