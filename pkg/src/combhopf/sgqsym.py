"""SGQSym: the commutative Hopf algebra of permutations, its dual SGSym, and the
subalgebra tower PiQSym > QSym > Sym together with the involutive subalgebra."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as iproduct
from typing import Callable, Hashable, Sequence

from .combinat.cycles import (
    Cycle,
    csupp,
    cycle_decomposition,
    cycle_type,
    ordered_cycle_type,
    permutation_from_cycles,
)
from .combinat.enumerate import enumerate_family
from .combinat.partitions import sort_partition, union, z
from .combinat.words import Word, restrict, shifted_concat
from .element import Element, Tensor2
from .eqsym import eqsym_coproduct, eqsym_product, unshuffle_constants
from .errors import NotInSpanError
from .series import cyclic_character_coefficients

SGQSYM = "SGQSym"
SGSYM = "SGSym"
PIQSYM = "PiQSym"
QSYM_EMB = "QSym-emb"
SYM_EMB = "Sym-emb"
INVOLUTIVE = "SGQSym-inv"


def sg_product(alpha: Word, beta: Word) -> Element:
    return eqsym_product(alpha, beta, algebra=SGQSYM)


def sg_coproduct(sigma: Word) -> Tensor2:
    return eqsym_coproduct(sigma, algebra=SGQSYM)


def sg_product_cycle_splitting(alpha: Word, beta: Word) -> Element:
    """Relabel the cycles of alpha into A and of beta into the complement B,
    over every n-subset A of [n+m], by the increasing bijections."""
    n, m = len(alpha), len(beta)
    ca, cb = cycle_decomposition(alpha), cycle_decomposition(beta)
    counts: Counter = Counter()
    for A in combinations(range(1, n + m + 1), n):
        B = [i for i in range(1, n + m + 1) if i not in set(A)]
        to_a = dict(zip(range(1, n + 1), A))
        to_b = dict(zip(range(1, m + 1), B))
        cycles = [c.relabel(to_a) for c in ca] + [c.relabel(to_b) for c in cb]
        counts[permutation_from_cycles(cycles, n + m)] += 1
    return Element(SGQSYM, counts)


def cycle_placements(alpha: Word, beta: Word) -> list[tuple[Cycle, ...]]:
    """The cycle sets produced by every splitting, one entry per splitting."""
    n, m = len(alpha), len(beta)
    ca, cb = cycle_decomposition(alpha), cycle_decomposition(beta)
    out = []
    for A in combinations(range(1, n + m + 1), n):
        B = [i for i in range(1, n + m + 1) if i not in set(A)]
        to_a = dict(zip(range(1, n + 1), A))
        to_b = dict(zip(range(1, m + 1), B))
        out.append(tuple(sorted([c.relabel(to_a) for c in ca] + [c.relabel(to_b) for c in cb])))
    return out


def dual_splitting_count(gamma: Word, alpha: Word, beta: Word) -> int:
    """Number of cycle subsets of gamma standardizing to alpha, complement to beta."""
    if len(alpha) + len(beta) != len(gamma):
        return 0
    cycles = cycle_decomposition(gamma)
    count = 0
    for r in range(len(cycles) + 1):
        for chosen in combinations(cycles, r):
            A = sorted(a - 1 for c in chosen for a in c.elements)
            if len(A) != len(alpha):
                continue
            B = [i for i in range(len(gamma)) if i not in set(A)]
            if restrict(gamma, A) == tuple(alpha) and restrict(gamma, B) == tuple(beta):
                count += 1
    return count


def sgsym_product(alpha: Word, beta: Word) -> Element:
    return Element.basis(SGSYM, shifted_concat(alpha, beta))


def sgsym_coproduct(sigma: Word) -> Tensor2:
    return Tensor2(SGSYM, unshuffle_constants(tuple(sigma)))


def basis(n: int) -> list[Word]:
    return list(enumerate_family("permutations", n))


# ------------------------------------------------------- coarser bases


@lru_cache(maxsize=None)
def _classes(n: int, kind: str) -> dict:
    classify = CLASSIFIERS[kind]
    out: dict = defaultdict(list)
    for s in enumerate_family("permutations", n):
        out[classify(s)].append(s)
    return dict(out)


CLASSIFIERS: dict[str, Callable[[Word], Hashable]] = {
    "u_pi": csupp,
    "uq": ordered_cycle_type,
    "ul": cycle_type,
}

_KIND_TAG = {"u_pi": PIQSYM, "uq": QSYM_EMB, "ul": SYM_EMB}


def class_degree(kind: str, key) -> int:
    if kind == "u_pi":
        return sum(len(b) for b in key)
    return sum(key)


def members(kind: str, key) -> list[Word]:
    """Permutations whose M's sum to the coarse basis element ``key``."""
    return _classes(class_degree(kind, key), kind).get(tuple(key), [])


def expand(kind: str, key) -> Element:
    return Element(SGQSYM, [(s, 1) for s in members(kind, key)])


def regroup(x: Element, kind: str) -> Element:
    """Rewrite an M-basis element in a coarse basis; raise if it leaves the span."""
    classify = CLASSIFIERS[kind]
    grouped: dict = defaultdict(dict)
    for s, c in x.terms.items():
        grouped[classify(s)][s] = c
    out = {}
    for cls, terms in grouped.items():
        mem = members(kind, cls)
        coeffs = {terms.get(s, 0) for s in mem}
        if len(coeffs) != 1 or len(terms) != len(mem):
            raise NotInSpanError(f"{kind}: class {cls} has unequal coefficients {sorted(map(str, coeffs))}")
        out[cls] = coeffs.pop()
    return Element(_KIND_TAG[kind], out)


def regroup_tensor(t: Tensor2, kind: str) -> Tensor2:
    classify = CLASSIFIERS[kind]
    grouped: dict = defaultdict(dict)
    for (a, b), c in t.terms.items():
        grouped[(classify(a), classify(b))][(a, b)] = c
    out = {}
    for (ka, kb), terms in grouped.items():
        mem = [(a, b) for a in members(kind, ka) for b in members(kind, kb)]
        coeffs = {terms.get(p, 0) for p in mem}
        if len(coeffs) != 1 or len(terms) != len(mem):
            raise NotInSpanError(f"{kind}: tensor class {(ka, kb)} not in span")
        out[(ka, kb)] = coeffs.pop()
    return Tensor2(_KIND_TAG[kind], out)


def coarse_product(kind: str, a, b) -> Element:
    acc = Element(SGQSYM)
    for s in members(kind, a):
        for t in members(kind, b):
            acc = acc + sg_product(s, t)
    return regroup(acc, kind)


def coarse_coproduct(kind: str, a) -> Tensor2:
    acc = Tensor2(SGQSYM)
    for s in members(kind, a):
        acc = acc + sg_coproduct(s)
    return regroup_tensor(acc, kind)


def pi_product(p1, p2) -> Element:
    return coarse_product("u_pi", tuple(map(tuple, p1)), tuple(map(tuple, p2)))


def uq_product(i1, i2) -> Element:
    return coarse_product("uq", tuple(i1), tuple(i2))


def ul_product(l1, l2) -> Element:
    return coarse_product("ul", sort_partition(l1), sort_partition(l2))


def ul_product_predicted(l1, l2) -> Element:
    """ul_lam ul_mu = z_{lam u mu} / (z_lam z_mu) ul_{lam u mu}."""
    lam, mu = sort_partition(l1), sort_partition(l2)
    nu = union(lam, mu)
    return Element(SYM_EMB, {nu: Fraction(z(nu), z(lam) * z(mu))})


def cyclic_character(n: int) -> Element:
    """The cyclic character in the power-sum basis (tag ``Sym-p``)."""
    return Element("Sym-p", cyclic_character_coefficients(n))


def quasi_shuffle(I: Sequence[int], J: Sequence[int]) -> Counter:
    """Ordinary quasi-shuffle (stuffle) of compositions."""
    I, J = tuple(I), tuple(J)
    if not I:
        return Counter({J: 1})
    if not J:
        return Counter({I: 1})
    out: Counter = Counter()
    for w, c in quasi_shuffle(I[1:], J).items():
        out[(I[0],) + w] += c
    for w, c in quasi_shuffle(I, J[1:]).items():
        out[(J[0],) + w] += c
    for w, c in quasi_shuffle(I[1:], J[1:]).items():
        out[(I[0] + J[0],) + w] += c
    return out


def uq_versus_quasi_shuffle(max_degree: int) -> list[tuple]:
    """(I, J, uq constants, quasi-shuffle constants) wherever the two differ."""
    from .combinat.partitions import compositions

    found = []
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for I in compositions(d1):
                for J in compositions(d2):
                    got = dict(uq_product(I, J).terms)
                    qs = dict(quasi_shuffle(I, J))
                    if got != qs:
                        found.append((I, J, got, qs))
    return found


# ------------------------------------------------------- involutive subalgebra


def is_involution(s: Sequence[int]) -> bool:
    return all(s[s[i] - 1] == i + 1 for i in range(len(s)))


@dataclass
class SpanReport:
    n: int
    dimensions: dict[int, int] = field(default_factory=dict)
    products_closed: bool = True
    coproducts_closed: bool = True
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.products_closed and self.coproducts_closed


def involutive_span_check(n: int) -> SpanReport:
    """Products and coproducts of involution-indexed M's, total degree <= n."""
    rep = SpanReport(n)
    invs = {d: list(enumerate_family("involutions", d)) for d in range(n + 1)}
    for d in range(n + 1):
        rep.dimensions[d] = len(invs[d])
        for s in invs[d]:
            for (a, b), _ in sg_coproduct(s).terms.items():
                if not (is_involution(a) and is_involution(b)):
                    rep.coproducts_closed = False
                    rep.witness = rep.witness or ("coproduct", s)
    for d1 in range(1, n):
        for d2 in range(1, n - d1 + 1):
            for s, t in iproduct(invs[d1], invs[d2]):
                for h in sg_product(s, t).terms:
                    if not is_involution(h):
                        rep.products_closed = False
                        rep.witness = rep.witness or ("product", s, t, h)
    return rep


def ul_identity_holds(l1, l2) -> bool:
    return ul_product(l1, l2) == ul_product_predicted(l1, l2)
