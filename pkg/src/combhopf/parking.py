"""CPQSym on parking functions, its quotient CCQSym on nondecreasing ones,
unlabelled parking graphs (UPG) and the rooted-forest basis."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Callable, Hashable

from .combinat.enumerate import enumerate_family
from .combinat.graphs import (
    forest_code,
    forest_size,
    graph_code,
    graph_size,
    graph_union,
    is_nondecreasing,
    is_parking,
)
from .element import Element, Tensor2
from .eqsym import eqsym_coproduct, eqsym_product
from .errors import InvariantViolation, NotInSpanError
from .combinat.words import Word

CPQSYM = "CPQSym"
CCQSYM = "CCQSym"
UPG = "UPG"
FOREST = "Forest"


def cpq_product(p: Word, r: Word) -> Element:
    out = eqsym_product(p, r, algebra=CPQSYM)
    for h in out.terms:
        if not is_parking(h):
            raise InvariantViolation(f"M_{p} M_{r} produced non-parking M_{h}")
    return out


def cpq_coproduct(p: Word) -> Tensor2:
    return eqsym_coproduct(p, algebra=CPQSYM)


def cpq_basis(n: int) -> list[Word]:
    return list(enumerate_family("parking_functions", n))


def ccq_project(x: Element) -> Element:
    """Kill M_p whenever p is not nondecreasing."""
    return Element(CCQSYM, [(p, c) for p, c in x.terms.items() if is_nondecreasing(p)])


def ccq_project_tensor(t: Tensor2) -> Tensor2:
    return Tensor2(CCQSYM, [((a, b), c) for (a, b), c in t.terms.items() if is_nondecreasing(a) and is_nondecreasing(b)])


def ccq_product(p1: Word, p2: Word) -> Element:
    return ccq_project(cpq_product(p1, p2))


def ccq_coproduct(p: Word) -> Tensor2:
    return ccq_project_tensor(cpq_coproduct(p))


def ccq_basis(n: int) -> list[Word]:
    return list(enumerate_family("nondecreasing_parking_functions", n))


@dataclass
class IdealReport:
    max_degree: int
    checked: int = 0
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.witness is None


def ideal_coideal_check(max_degree: int) -> IdealReport:
    """The span of M_p with p not nondecreasing is an ideal and a coideal of CPQSym."""
    rep = IdealReport(max_degree)
    keys = {d: cpq_basis(d) for d in range(max_degree + 1)}
    for d1 in range(1, max_degree + 1):
        for p in keys[d1]:
            if is_nondecreasing(p):
                continue
            rep.checked += 1
            for (a, b) in cpq_coproduct(p).terms:
                if is_nondecreasing(a) and is_nondecreasing(b):
                    rep.witness = rep.witness or ("coproduct", p, (a, b))
            for d2 in range(1, max_degree - d1 + 1):
                for r in keys[d2]:
                    rep.checked += 1
                    for h in cpq_product(p, r).terms:
                        if is_nondecreasing(h):
                            rep.witness = rep.witness or ("product", p, r, h)
    return rep


# ------------------------------------------------------------ generic regrouping


def regroup(
    x: Element,
    classify: Callable[[Word], Hashable],
    members: Callable[[Hashable], list],
    tag: str,
    scale: Callable[[Hashable], object] | None = None,
) -> Element:
    """Rewrite x as a combination of class sums (optionally scaled); raise if impossible."""
    grouped: dict = defaultdict(dict)
    for k, c in x.terms.items():
        grouped[classify(k)][k] = c
    out = {}
    for cls, terms in grouped.items():
        mem = members(cls)
        coeffs = {terms.get(k, 0) for k in mem}
        if len(coeffs) != 1 or len(terms) != len(mem):
            raise NotInSpanError(f"{tag}: class {cls!r} is not uniformly covered")
        c = coeffs.pop()
        out[cls] = c / scale(cls) if scale else c
    return Element(tag, out)


def regroup_tensor(t: Tensor2, classify, members, tag: str, scale=None) -> Tensor2:
    grouped: dict = defaultdict(dict)
    for (a, b), c in t.terms.items():
        grouped[(classify(a), classify(b))][(a, b)] = c
    out = {}
    for (ka, kb), terms in grouped.items():
        mem = [(a, b) for a in members(ka) for b in members(kb)]
        coeffs = {terms.get(p, 0) for p in mem}
        if len(coeffs) != 1 or len(terms) != len(mem):
            raise NotInSpanError(f"{tag}: tensor class {(ka, kb)!r} is not uniformly covered")
        c = coeffs.pop()
        out[(ka, kb)] = c / (scale(ka) * scale(kb)) if scale else c
    return Tensor2(tag, out)


# ---------------------------------------------------------- unlabelled graphs


@lru_cache(maxsize=None)
def _graph_classes(n: int, family: str) -> dict:
    out: dict = defaultdict(list)
    for f in enumerate_family(family, n):
        out[graph_code(f)].append(f)
    return dict(out)


def upg_basis(n: int) -> list:
    """Unlabelled parking graphs of size n (codes of functional graphs of parking functions)."""
    return sorted(_graph_classes(n, "parking_functions"))


def all_graph_codes(n: int) -> list:
    return sorted(_graph_classes(n, "endofunctions"))


def unlabelled_product(g1, g2) -> Element:
    return Element.basis(UPG, graph_union(g1, g2))


def unlabelled_coproduct(g) -> Tensor2:
    """Unshuffle over the connected components (listed with multiplicity)."""
    comps = list(g)
    counts: Counter = Counter()
    for r in range(len(comps) + 1):
        for left in combinations(range(len(comps)), r):
            a = tuple(sorted(comps[i] for i in left))
            b = tuple(sorted(comps[i] for i in range(len(comps)) if i not in left))
            counts[(a, b)] += 1
    return Tensor2(UPG, counts)


def component_symmetry(g) -> int:
    """prod over component types of (multiplicity)!."""
    return prod(factorial(m) for m in Counter(g).values())


def labellings(g, family: str = "endofunctions") -> list[Word]:
    return _graph_classes(graph_size(g), family).get(g, [])


def realize_all(g) -> Element:
    """iota(U_G) = (component symmetry) * sum of M_h over all endofunctions h with graph G."""
    k = component_symmetry(g)
    return Element("EQSym", [(h, k) for h in labellings(g, "endofunctions")])


def realize_parking(g) -> Element:
    """W_G = sum of M_p over parking functions p with graph G."""
    return Element(CPQSYM, [(p, 1) for p in labellings(g, "parking_functions")])


@dataclass
class ClosureReport:
    name: str
    max_degree: int
    dimensions: dict[int, int] = field(default_factory=dict)
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _multiply(product, x: Element, y: Element, tag: str) -> Element:
    acc: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for h, c in product(a, b).terms.items():
                acc[h] = acc.get(h, 0) + ca * cb * c
    return Element(tag, acc)


def _coproduct(cop, x: Element, tag: str) -> Tensor2:
    acc: dict = {}
    for a, ca in x.terms.items():
        for k, c in cop(a).terms.items():
            acc[k] = acc.get(k, 0) + ca * c
    return Tensor2(tag, acc)


def upg_morphism_check(max_degree: int) -> ClosureReport:
    """iota is an algebra and coalgebra morphism UPG -> EQSym (total degree <= max_degree)."""
    rep = ClosureReport("UPG->EQSym", max_degree)
    codes = {d: all_graph_codes(d) for d in range(max_degree + 1)}
    for d in range(max_degree + 1):
        rep.dimensions[d] = len(codes[d])
        for g in codes[d]:
            rep.checked += 1
            lhs = _coproduct(eqsym_coproduct, realize_all(g), "EQSym")
            rhs: dict = {}
            for (a, b), c in unlabelled_coproduct(g).terms.items():
                for ka, ca in realize_all(a).terms.items():
                    for kb, cb in realize_all(b).terms.items():
                        rhs[(ka, kb)] = rhs.get((ka, kb), 0) + c * ca * cb
            if lhs != Tensor2("EQSym", rhs):
                rep.failures.append(("coproduct", g))
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for g1 in codes[d1]:
                for g2 in codes[d2]:
                    rep.checked += 1
                    lhs = _multiply(eqsym_product, realize_all(g1), realize_all(g2), "EQSym")
                    if lhs != realize_all(graph_union(g1, g2)):
                        rep.failures.append(("product", g1, g2))
    return rep


def parking_realization_closure(max_degree: int) -> ClosureReport:
    """Do the parking-labelling sums W_G span a subalgebra of CPQSym?"""
    rep = ClosureReport("W_G in CPQSym", max_degree)
    codes = {d: upg_basis(d) for d in range(max_degree + 1)}
    for d in range(max_degree + 1):
        rep.dimensions[d] = len(codes[d])
    members = lambda g: labellings(g, "parking_functions")  # noqa: E731
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for g1 in codes[d1]:
                for g2 in codes[d2]:
                    rep.checked += 1
                    prod_ = _multiply(cpq_product, realize_parking(g1), realize_parking(g2), CPQSYM)
                    try:
                        regroup(prod_, graph_code, members, UPG)
                    except NotInSpanError as exc:
                        rep.failures.append((g1, g2, str(exc)))
    return rep


def unlabelled_dimensions(n_max: int) -> list[int]:
    return [len(upg_basis(n)) for n in range(n_max + 1)]


# ----------------------------------------------------------------- forests


@lru_cache(maxsize=None)
def _forest_classes(n: int) -> dict:
    out: dict = defaultdict(list)
    for p in enumerate_family("nondecreasing_parking_functions", n):
        out[forest_code(p)].append(p)
    return dict(out)


def forest_basis(n: int) -> list:
    return sorted(_forest_classes(n))


def forest_members(code) -> list[Word]:
    return _forest_classes(forest_size(code)).get(code, [])


def forest_expand(code) -> Element:
    return Element(CCQSYM, [(p, 1) for p in forest_members(code)])


def forest_basis_product(f1, f2) -> Element:
    """M_F1 M_F2 computed in CCQSym and regrouped by forest; raises if not in span."""
    acc = _multiply(ccq_product, forest_expand(f1), forest_expand(f2), CCQSYM)
    return regroup(acc, forest_code, forest_members, FOREST)


def forest_basis_coproduct(code) -> Tensor2:
    acc = _coproduct(ccq_coproduct, forest_expand(code), CCQSYM)
    return regroup_tensor(acc, forest_code, forest_members, FOREST)


def forest_closure(max_degree: int) -> ClosureReport:
    rep = ClosureReport("Forest in CCQSym", max_degree)
    codes = {d: forest_basis(d) for d in range(max_degree + 1)}
    for d in range(max_degree + 1):
        rep.dimensions[d] = len(codes[d])
        for f in codes[d]:
            rep.checked += 1
            try:
                forest_basis_coproduct(f)
            except NotInSpanError as exc:
                rep.failures.append(("coproduct", f, str(exc)))
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for f1 in codes[d1]:
                for f2 in codes[d2]:
                    rep.checked += 1
                    try:
                        forest_basis_product(f1, f2)
                    except NotInSpanError as exc:
                        rep.failures.append(("product", f1, f2, str(exc)))
    return rep


def binomial_multiplicity(g, part) -> int:
    """prod_t C(m_t(g), m_t(part)): how many component subsets of g are isomorphic to part."""
    mg, mp = Counter(g), Counter(part)
    return prod(comb(mg[t], mp[t]) for t in mp)
