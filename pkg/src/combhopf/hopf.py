"""Algebra registry, bilinear extensions, Hopf-axiom harness and the Eulerian idempotent."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Hashable, Iterable

from .element import Element, Tensor2, register_degree
from .errors import AugmentationError, UnknownAlgebraError
from .scalar import QPoly

Key = Hashable


@dataclass(frozen=True)
class Algebra:
    """A graded connected (possibly twisted) bialgebra given on a basis."""

    tag: str
    basis_name: str
    basis: Callable[[int], Iterable[Key]]
    degree: Callable[[Key], int]
    product: Callable[[Key, Key], Element]
    coproduct: Callable[[Key], Tensor2]
    unit: Key = ()
    twisted: bool = False
    cocommutative: bool = False
    commutative: bool = False
    description: str = ""
    q_product: Callable | None = None
    q_coproduct: Callable | None = None


_REGISTRY: dict[str, Algebra] = {}


def register(alg: Algebra) -> Algebra:
    _REGISTRY[alg.tag] = alg
    register_degree(alg.tag, alg.degree)
    return alg


def get_algebra(tag: str) -> Algebra:
    if tag not in _REGISTRY:
        from . import algebras  # noqa: F401  (registers the built-in algebras)
    try:
        return _REGISTRY[tag]
    except KeyError:
        raise UnknownAlgebraError(f"unregistered algebra {tag!r}") from None


def registered() -> list[str]:
    from . import algebras  # noqa: F401

    return sorted(_REGISTRY)


# ------------------------------------------------------------ bilinear helpers


def multiply(alg: Algebra, x: Element, y: Element) -> Element:
    acc: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for k, c in alg.product(a, b).terms.items():
                acc[k] = acc.get(k, 0) + ca * cb * c
    return Element(alg.tag, acc)


def multiply_keys(alg: Algebra, a: Key, x: Element) -> Element:
    return multiply(alg, Element.basis(alg.tag, a), x)


def coproduct_element(alg: Algebra, x: Element) -> Tensor2:
    acc: dict = {}
    for a, ca in x.terms.items():
        for k, c in alg.coproduct(a).terms.items():
            acc[k] = acc.get(k, 0) + ca * c
    return Tensor2(alg.tag, acc)


def twist_factor(deg_b: int, deg_a2: int, q=None):
    """chi(b, a') = q^(deg b * deg a'); ``q=None`` means formal q."""
    e = deg_b * deg_a2
    if q is None:
        return QPoly.q(e) if e else 1
    return q ** e


def tensor_multiply(alg: Algebra, t1: Tensor2, t2: Tensor2, *, twisted: bool | None = None, q=None) -> Tensor2:
    """(a (x) b)(a' (x) b') = chi(b, a') aa' (x) bb' (chi = 1 when untwisted)."""
    if twisted is None:
        twisted = alg.twisted
    acc: dict = {}
    for (a, b), c1 in t1.terms.items():
        for (a2, b2), c2 in t2.terms.items():
            chi = twist_factor(alg.degree(b), alg.degree(a2), q) if twisted else 1
            left = alg.product(a, a2)
            right = alg.product(b, b2)
            for ka, la in left.terms.items():
                for kb, lb in right.terms.items():
                    key = (ka, kb)
                    acc[key] = acc.get(key, 0) + c1 * c2 * chi * la * lb
    return Tensor2(alg.tag, acc)


def coproduct3_left(alg: Algebra, key: Key) -> dict:
    """(Delta (x) id) Delta on a basis key, as {(a, b, c): coeff}."""
    acc: dict = {}
    for (x, y), c in alg.coproduct(key).terms.items():
        for (a, b), d in alg.coproduct(x).terms.items():
            acc[(a, b, y)] = acc.get((a, b, y), 0) + c * d
    return {k: v for k, v in acc.items() if v}


def coproduct3_right(alg: Algebra, key: Key) -> dict:
    acc: dict = {}
    for (x, y), c in alg.coproduct(key).terms.items():
        for (a, b), d in alg.coproduct(y).terms.items():
            acc[(x, a, b)] = acc.get((x, a, b), 0) + c * d
    return {k: v for k, v in acc.items() if v}


# ------------------------------------------------------------------ harness


@dataclass
class HopfReport:
    algebra: str
    max_degree: int
    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, object] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def fail(self, name: str, witness) -> None:
        self.checks[name] = False
        self.counterexamples.setdefault(name, witness)

    def lines(self) -> list[str]:
        out = []
        for name, ok in self.checks.items():
            line = f"{'PASS' if ok else 'FAIL'} {self.algebra} {name} (degree <= {self.max_degree}, {self.counts.get(name, 0)} cases)"
            if not ok:
                line += f" witness={self.counterexamples[name]!r}"
            out.append(line)
        return out


def _keys_upto(alg: Algebra, max_degree: int) -> dict[int, list[Key]]:
    return {d: list(alg.basis(d)) for d in range(0, max_degree + 1)}


def _compositions_of_degrees(total_max: int, parts: int):
    for degs in iproduct(range(1, total_max + 1), repeat=parts):
        if sum(degs) <= total_max:
            yield degs


def check_hopf_axioms(algebra_tag: str, max_degree: int, *, cocommutative: bool | None = None) -> HopfReport:
    """Exhaustively check the bialgebra axioms on basis elements within a degree budget.

    Associativity and compatibility are checked on triples/pairs of positive
    degree with total degree <= max_degree; coassociativity and the counit law on
    every basis key up to max_degree.  Twisted algebras use the chi-twisted
    tensor product for compatibility.
    """
    alg = get_algebra(algebra_tag)
    if cocommutative is None:
        cocommutative = alg.cocommutative
    keys = _keys_upto(alg, max_degree)
    rep = HopfReport(alg.tag, max_degree)
    for name in ("unit", "associativity", "coassociativity", "counit", "compatibility"):
        rep.checks[name] = True
        rep.counts[name] = 0
    if cocommutative:
        rep.checks["cocommutativity"] = True
        rep.counts["cocommutativity"] = 0
    one = Element.basis(alg.tag, alg.unit)

    for d in range(max_degree + 1):
        for k in keys[d]:
            x = Element.basis(alg.tag, k)
            rep.counts["unit"] += 1
            if alg.product(alg.unit, k) != x or alg.product(k, alg.unit) != x:
                rep.fail("unit", k)

    for degs in _compositions_of_degrees(max_degree, 3):
        for a, b, c in iproduct(keys[degs[0]], keys[degs[1]], keys[degs[2]]):
            rep.counts["associativity"] += 1
            left = multiply(alg, alg.product(a, b), Element.basis(alg.tag, c))
            right = multiply(alg, Element.basis(alg.tag, a), alg.product(b, c))
            if left != right:
                rep.fail("associativity", (a, b, c))

    for d in range(max_degree + 1):
        for k in keys[d]:
            cop = alg.coproduct(k)
            rep.counts["coassociativity"] += 1
            if coproduct3_left(alg, k) != coproduct3_right(alg, k):
                rep.fail("coassociativity", k)
            rep.counts["counit"] += 1
            left = Element(alg.tag, [(b, c) for (a, b), c in cop.terms.items() if alg.degree(a) == 0 and a == alg.unit])
            right = Element(alg.tag, [(a, c) for (a, b), c in cop.terms.items() if alg.degree(b) == 0 and b == alg.unit])
            x = Element.basis(alg.tag, k)
            if left != x or right != x:
                rep.fail("counit", k)
            if cocommutative:
                rep.counts["cocommutativity"] += 1
                if cop.flip() != cop:
                    rep.fail("cocommutativity", k)

    if alg.unit in keys[0]:
        rep.counts["compatibility"] += 1
        if alg.coproduct(alg.unit) != Tensor2(alg.tag, {(alg.unit, alg.unit): 1}):
            rep.fail("compatibility", (alg.unit,))
    for degs in _compositions_of_degrees(max_degree, 2):
        for a, b in iproduct(keys[degs[0]], keys[degs[1]]):
            rep.counts["compatibility"] += 1
            lhs = coproduct_element(alg, alg.product(a, b))
            rhs = tensor_multiply(alg, alg.coproduct(a), alg.coproduct(b))
            if lhs != rhs:
                rep.fail("compatibility", (a, b))
    return rep


# ------------------------------------------------------- Eulerian idempotent


def convolution_log_project(
    x: Element,
    coproduct: Callable[[Key], Tensor2],
    product: Callable[[Key, Key], Element],
    degree: Callable[[Key], int],
) -> Element:
    """pi_1(x) = log*(Id)(x) = sum_{k>=1} (-1)^(k-1)/k (Id - eta eps)^{*k}(x).

    Uses (Id - eta eps)^{*k} = mu o (P (x) (Id - eta eps)^{*(k-1)}) o Delta with P
    the projection killing degree 0; the sum stops at k = deg(x).
    """
    degs = {degree(k) for k in x.terms}
    if not x.terms:
        return x
    if len(degs) != 1:
        raise ValueError("convolution_log_project expects a homogeneous element")
    n = degs.pop()
    if n == 0:
        raise AugmentationError("not in augmentation ideal: degree-0 input")
    tag = x.algebra
    memo: dict = {}

    def power(k: int, key: Key) -> Element:
        if (k, key) in memo:
            return memo[(k, key)]
        if degree(key) == 0:
            res = Element(tag)
        elif k == 1:
            res = Element.basis(tag, key)
        else:
            acc: dict = {}
            for (a, b), c in coproduct(key).terms.items():
                if degree(a) == 0 or degree(b) == 0:
                    continue
                for kb, cb in power(k - 1, b).terms.items():
                    for kk, cc in product(a, kb).terms.items():
                        acc[kk] = acc.get(kk, 0) + c * cb * cc
            res = Element(tag, acc)
        memo[(k, key)] = res
        return res

    acc: dict = {}
    for k in range(1, n + 1):
        w = Fraction((-1) ** (k - 1), k)
        for key, c in x.terms.items():
            for kk, cc in power(k, key).terms.items():
                acc[kk] = acc.get(kk, 0) + w * c * cc
    return Element(tag, acc)


def is_primitive(alg: Algebra, x: Element) -> bool:
    expected = Tensor2(alg.tag, [((k, alg.unit), c) for k, c in x.terms.items()] + [((alg.unit, k), c) for k, c in x.terms.items()])
    return coproduct_element(alg, x) == expected
