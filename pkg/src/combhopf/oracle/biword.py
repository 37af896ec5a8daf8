"""Noncommutative biword realization of PhiSym at truncation N.

A biword is a pair of rows (x, a) of equal length with letters in 1..N.  Every
biword lies in the support of exactly one phi_sigma, and phi_sigma is the sum of
its support with coefficient 1.  The product is concatenation, which is
injective on pairs, so a product of two phi's is a 0/1 combination of biwords.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .. import accel
from ..combinat.enumerate import enumerate_family
from ..element import Element
from ..phisym import PHISYM, phi_product

BIWORD_BUDGET = (5, 6)  # total length, alphabet size


def all_biwords(n: int, N: int) -> tuple[np.ndarray, np.ndarray]:
    words = accel.all_words(n, N)
    k = words.shape[0]
    xs = np.repeat(words, k, axis=0)
    as_ = np.tile(words, (k, 1))
    return xs, as_


def _perm_rows(xs: np.ndarray, as_: np.ndarray) -> list[tuple[int, ...]]:
    return [tuple(int(v) for v in row) for row in accel.biword_permutations(xs, as_)]


@lru_cache(maxsize=None)
def support_sizes(n: int, N: int) -> dict:
    """|supp phi_sigma| at truncation N, for every sigma of size n."""
    xs, as_ = all_biwords(n, N)
    return dict(Counter(_perm_rows(xs, as_)))


@lru_cache(maxsize=None)
def _classified(n: int, N: int):
    xs, as_ = all_biwords(n, N)
    return xs, as_, accel.biword_permutations(xs, as_)


def expand_phi(sigma, N: int) -> tuple[np.ndarray, np.ndarray]:
    """The support of phi_sigma as two arrays (x rows, a rows)."""
    sigma = np.asarray(sigma, dtype=np.int64)
    n = sigma.shape[0]
    xs, as_, perms = _classified(n, N)
    mask = (perms == sigma[None, :]).all(axis=1) if n else np.ones(xs.shape[0], dtype=bool)
    return xs[mask], as_[mask]


def concat_product(p: tuple[np.ndarray, np.ndarray], r: tuple[np.ndarray, np.ndarray]):
    (x1, a1), (x2, a2) = p, r
    k1, k2 = x1.shape[0], x2.shape[0]
    xs = np.hstack([np.repeat(x1, k2, axis=0), np.tile(x2, (k1, 1))])
    as_ = np.hstack([np.repeat(a1, k2, axis=0), np.tile(a2, (k1, 1))])
    return xs, as_


def oracle_phi_product(alpha, beta, N: int) -> tuple[Element, list]:
    """phi_alpha phi_beta re-identified from the truncated realization.

    Returns the element and a list of sigma whose support was only partially
    covered (which would mean the product is not a combination of phi's).
    """
    n = len(alpha) + len(beta)
    xs, as_ = concat_product(expand_phi(alpha, N), expand_phi(beta, N))
    counts = Counter(_perm_rows(xs, as_))
    sizes = support_sizes(n, N)
    terms, partial = {}, []
    for sigma, c in counts.items():
        if c == sizes[sigma]:
            terms[sigma] = 1
        else:
            partial.append((sigma, c, sizes[sigma]))
    return Element(PHISYM, terms), partial


@dataclass
class PhiOracleReport:
    max_degree: int
    N: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_phi_constants(max_degree: int = 4, N: int = 6) -> PhiOracleReport:
    """Compare phi_product with the biword oracle on all pairs of total degree <= max_degree."""
    total, alphabet = BIWORD_BUDGET
    if max_degree > total or N > alphabet:
        from ..errors import BudgetExceededError

        raise BudgetExceededError(f"biword oracle budget is total degree <= {total}, N <= {alphabet}")
    if N < max_degree:
        raise ValueError("truncation must be at least the total degree")
    rep = PhiOracleReport(max_degree, N)
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for a in enumerate_family("permutations", d1):
                for b in enumerate_family("permutations", d2):
                    rep.checked += 1
                    got, partial = oracle_phi_product(a, b, N)
                    if partial or got != phi_product(a, b):
                        rep.failures.append((a, b, partial))
    return rep


def expand_ssec(sigma, N: int) -> tuple[np.ndarray, np.ndarray]:
    """Support of S''_sigma: x constant on each cycle (merging allowed), and on each
    cycle the a-letters visit its positions in cyclic order (ties broken by position)."""
    from ..combinat.cycles import cycle_decomposition

    n = len(sigma)
    xs, as_ = all_biwords(n, N)
    keep = np.ones(xs.shape[0], dtype=bool)
    base = max(N, n) + 1
    for c in cycle_decomposition(tuple(sigma)):
        P = np.array([e - 1 for e in c.elements], dtype=np.int64)
        if len(P) == 1:
            continue
        keep &= (xs[:, P] == xs[:, P[:1]]).all(axis=1)
        keys = as_[:, P] * base + P[None, :]
        order = np.argsort(keys, axis=1, kind="stable")
        steps = (np.roll(order, -1, axis=1) - order) % len(P)
        keep &= (steps == 1).all(axis=1)
    return xs[keep], as_[keep]


def oracle_ssec(sigma, N: int) -> tuple[Element, list]:
    """S''_sigma re-identified in the phi basis from its biword definition."""
    xs, as_ = expand_ssec(sigma, N)
    counts = Counter(_perm_rows(xs, as_))
    sizes = support_sizes(len(sigma), N)
    terms, partial = {}, []
    for tau, c in counts.items():
        if c == sizes[tau]:
            terms[tau] = 1
        else:
            partial.append((tau, c, sizes[tau]))
    return Element(PHISYM, terms), partial
