"""q-commuting letters x_1..x_N with x_j x_i = q x_i x_j for j > i.

A monomial is kept in normal order (ascending indices) as an exponent vector;
moving a word to normal order costs one factor of q per inversion.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ..combinat.partitions import compositions
from ..combinat.words import inversions
from ..element import Element
from ..errors import BudgetExceededError
from ..quantum import QSYM_Q, qsymq_product
from ..scalar import QPoly, normalize


def qc_normal_order(word: Sequence[int], N: int | None = None) -> tuple[tuple[int, ...], int]:
    """(exponent vector, q exponent) of a word in the letters 1..N."""
    if N is None:
        N = max(word, default=0)
    exps = [0] * N
    for a in word:
        exps[a - 1] += 1
    return tuple(exps), inversions(word)


def expand_M(I: Sequence[int], N: int) -> list[tuple[int, ...]]:
    """M_I = sum_{i_1 < ... < i_k} x_{i_1}^{I_1} ... x_{i_k}^{I_k}, as letter words."""
    out = []
    for idx in combinations(range(1, N + 1), len(I)):
        out.append(tuple(a for a, e in zip(idx, I) for _ in range(e)))
    return out


def oracle_product(I: Sequence[int], J: Sequence[int], N: int) -> tuple[Element, list]:
    """M_I M_J re-identified from normal-ordered products of their expansions."""
    if N < len(I) + len(J):
        raise BudgetExceededError("truncation too small: need N >= number of parts of I and J together")
    poly: dict = defaultdict(lambda: QPoly())
    for u in expand_M(I, N):
        for v in expand_M(J, N):
            exps, e = qc_normal_order(u + v, N)
            poly[exps] = poly[exps] + QPoly.q(e)
    groups: dict = defaultdict(dict)
    for exps, c in poly.items():
        if c:
            groups[tuple(x for x in exps if x)][exps] = c
    terms, leftover = {}, []
    for K, monos in groups.items():
        support = {qc_normal_order(w, N)[0] for w in expand_M(K, N)}
        coeffs = {monos.get(m, QPoly()) for m in support}
        if len(coeffs) != 1 or set(monos) - support:
            leftover.append((K, sorted(map(str, coeffs))))
            continue
        terms[K] = normalize(coeffs.pop())
    return Element(QSYM_Q, terms), leftover


@dataclass
class QsymqReport:
    max_degree: int
    N: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_qsymq(max_degree: int = 4, N: int = 8) -> QsymqReport:
    rep = QsymqReport(max_degree, N)
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for I in compositions(d1):
                for J in compositions(d2):
                    rep.checked += 1
                    got, leftover = oracle_product(I, J, N)
                    if leftover or got != qsymq_product(I, J):
                        rep.failures.append((I, J, leftover))
    return rep
