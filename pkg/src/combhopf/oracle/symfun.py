"""Plain commuting variables for monomial symmetric functions, and the trace /
minor / permanent / immanant identities realized in the x_ij quotient."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from ..combinat.cycles import cycle_type
from ..combinat.enumerate import enumerate_family
from ..combinat.partitions import mn_character, partitions, sign, sort_partition
from ..element import Element
from ..errors import BudgetExceededError
from .xpoly import Poly, expand_M, poly_add, poly_mul, poly_scale

SYM_M = "Sym-m"


def expand_monomial_symmetric(lam: Sequence[int], N: int) -> dict[tuple[int, ...], int]:
    lam = sort_partition(lam)
    if len(lam) > N:
        return {}
    padded = tuple(lam) + (0,) * (N - len(lam))
    return {e: 1 for e in set(permutations(padded))}


def sym_monomial_product(lam: Sequence[int], mu: Sequence[int], N: int | None = None) -> Element:
    """m_lam m_mu in the monomial basis, by expansion in N commuting variables."""
    lam, mu = sort_partition(lam), sort_partition(mu)
    if N is None:
        N = len(lam) + len(mu)
    if N < len(lam) + len(mu):
        raise BudgetExceededError("need at least as many variables as parts of lam and mu together")
    prod: dict = defaultdict(int)
    for a in expand_monomial_symmetric(lam, N):
        for b in expand_monomial_symmetric(mu, N):
            prod[tuple(x + y for x, y in zip(a, b))] += 1
    terms = {}
    for e, c in prod.items():
        # read off the coefficient at the dominant (sorted) exponent only
        if list(e) == sorted(e, reverse=True):
            terms[tuple(x for x in e if x)] = c
    return Element(SYM_M, terms)


def multiply_m(x: Element, y: Element, N: int | None = None) -> Element:
    acc = Element(SYM_M)
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            acc = acc + (ca * cb) * sym_monomial_product(a, b, N)
    return acc


# ------------------------------------------------------------ x_ij identities


def realized_ul(lam: Sequence[int], N: int) -> Poly:
    lam = sort_partition(lam)
    out: Poly = {}
    for s in enumerate_family("permutations", sum(lam)):
        if cycle_type(s) == lam:
            out = poly_add(out, expand_M(s, (), N))
    return out


def trace_power(n: int, N: int) -> Poly:
    """tr(X^n) in the quotient by x_ij x_ik = 0 (repeated row indices vanish)."""
    out: dict = defaultdict(int)
    for idx in permutations(range(1, N + 1), n):
        mono = tuple(sorted((idx[k], idx[(k + 1) % n]) for k in range(n)))
        out[mono] += 1
    return dict(out)


def immanant_sum(weights, n: int, N: int) -> Poly:
    """sum_{i_1<..<i_n} sum_sigma w(sigma) x_{i_1 i_sigma(1)} ... ."""
    out: Poly = {}
    for s in enumerate_family("permutations", n):
        w = weights(s)
        if w:
            out = poly_add(out, expand_M(s, (), N), w)
    return out


def newton_e(p: list[Poly], n: int) -> list[Poly]:
    e = [{(): 1}]
    for m in range(1, n + 1):
        acc: Poly = {}
        for k in range(1, m + 1):
            acc = poly_add(acc, poly_mul(e[m - k], p[k]), (-1) ** (k - 1))
        e.append(poly_scale(acc, Fraction(1, m)))
    return e


def newton_h(p: list[Poly], n: int) -> list[Poly]:
    h = [{(): 1}]
    for m in range(1, n + 1):
        acc: Poly = {}
        for k in range(1, m + 1):
            acc = poly_add(acc, poly_mul(h[m - k], p[k]))
        h.append(poly_scale(acc, Fraction(1, m)))
    return h


def jacobi_trudi(lam: Sequence[int], h: list[Poly]) -> Poly:
    lam = sort_partition(lam)
    k = len(lam)

    def entry(i, j):
        d = lam[i] - i + j
        if d < 0:
            return {}
        return h[d]

    out: Poly = {}
    for perm in permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term: Poly = {(): 1}
        for i in range(k):
            term = poly_mul(term, entry(i, perm[i]))
            if not term:
                break
        out = poly_add(out, term, (-1) ** inv)
    return out


@dataclass
class SymIdentityReport:
    n_max: int
    N: int
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    def record(self, name: str, lhs: Poly, rhs: Poly) -> None:
        diff = poly_add(lhs, rhs, -1)
        self.checks[name] = not diff
        if diff:
            self.witnesses[name] = next(iter(diff.items()))

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_sym_identities(n_max: int = 4, N: int = 8) -> SymIdentityReport:
    rep = SymIdentityReport(n_max, N)
    p = [{}] + [trace_power(k, N) for k in range(1, n_max + 1)]
    e = newton_e(p, n_max)
    h = newton_h(p, n_max)
    for n in range(1, n_max + 1):
        rep.record(f"tr(X^{n}) = {n} ul_({n})", p[n], poly_scale(realized_ul((n,), N), n))
        minors = immanant_sum(lambda s: sign(cycle_type(s)), n, N)
        perms = immanant_sum(lambda s: 1, n, N)
        rep.record(f"e_{n} = diagonal minors", e[n], minors)
        rep.record(f"h_{n} = permanent minors", h[n], perms)
        sum_e: Poly = {}
        sum_h: Poly = {}
        for lam in partitions(n):
            ul = realized_ul(lam, N)
            sum_e = poly_add(sum_e, ul, sign(lam))
            sum_h = poly_add(sum_h, ul)
        rep.record(f"e_{n} = sum eps_lam ul_lam", e[n], sum_e)
        rep.record(f"h_{n} = sum ul_lam", h[n], sum_h)
        for lam in partitions(n):
            imm = immanant_sum(lambda s, lam=lam: mn_character(lam, cycle_type(s)), n, N)
            rep.record(f"s_{lam} = immanant", jacobi_trudi(lam, h), imm)
    return rep
