"""Graded finite linear combinations of basis keys, and their tensor squares."""

from __future__ import annotations

from collections.abc import Mapping
from types import MappingProxyType
from typing import Callable, Hashable, Iterable

from .scalar import normalize

Key = Hashable

_DEGREE: dict[str, Callable[[Key], int]] = {}


def register_degree(algebra: str, fn: Callable[[Key], int]) -> None:
    _DEGREE[algebra] = fn


def key_degree(algebra: str, key: Key) -> int:
    fn = _DEGREE.get(algebra)
    if fn is None:
        return len(key)
    return fn(key)


def _accumulate(pairs) -> dict:
    out: dict = {}
    for k, c in pairs:
        if not c:
            continue
        if k in out:
            out[k] = out[k] + c
        else:
            out[k] = c
    return {k: normalize(c) for k, c in out.items() if c}


class Element:
    """Immutable element of a graded algebra: basis key -> nonzero scalar."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: str, terms: Mapping | Iterable | None = None):
        if terms is None:
            terms = ()
        if isinstance(terms, Mapping):
            terms = terms.items()
        self.algebra = algebra
        self._terms = _accumulate(terms)

    @classmethod
    def basis(cls, algebra: str, key: Key, coeff=1) -> "Element":
        return cls(algebra, [(key, coeff)])

    @classmethod
    def zero(cls, algebra: str) -> "Element":
        return cls(algebra)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def degree_of(self, key: Key) -> int:
        return key_degree(self.algebra, key)

    def sort_key(self, key: Key):
        return (self.degree_of(key), key)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda kc: self.sort_key(kc[0]))

    def keys(self) -> list:
        return [k for k, _ in self.items()]

    def degrees(self) -> set[int]:
        return {self.degree_of(k) for k in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, key: Key):
        return self._terms.get(key, 0)

    __getitem__ = coefficient

    def map_coefficients(self, fn) -> "Element":
        return Element(self.algebra, [(k, fn(c)) for k, c in self._terms.items()])

    def map_keys(self, fn, algebra: str | None = None) -> "Element":
        return Element(algebra or self.algebra, [(fn(k), c) for k, c in self._terms.items()])

    def _check(self, other: "Element"):
        if other.algebra != self.algebra:
            from .errors import AlgebraMismatchError

            raise AlgebraMismatchError(f"{self.algebra} vs {other.algebra}")

    def __add__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra, list(self._terms.items()) + list(other._terms.items()))
        return NotImplemented

    def __neg__(self):
        return Element(self.algebra, [(k, -c) for k, c in self._terms.items()])

    def __sub__(self, other):
        if isinstance(other, Element):
            return self + (-other)
        return NotImplemented

    def __mul__(self, scalar):
        if isinstance(scalar, (Element, Tensor2)):
            return NotImplemented
        return Element(self.algebra, [(k, c * scalar) for k, c in self._terms.items()])

    def __rmul__(self, scalar):
        if isinstance(scalar, (Element, Tensor2)):
            return NotImplemented
        return Element(self.algebra, [(k, scalar * c) for k, c in self._terms.items()])

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra == other.algebra and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.keys())

    def __repr__(self):
        from .render import render_element

        return f"<{self.algebra}: {render_element(self)}>"


class Tensor2:
    """Linear combination of ordered pairs of basis keys."""

    __slots__ = ("algebras", "_terms")

    def __init__(self, algebras, terms: Mapping | Iterable | None = None):
        if isinstance(algebras, str):
            algebras = (algebras, algebras)
        if terms is None:
            terms = ()
        if isinstance(terms, Mapping):
            terms = terms.items()
        self.algebras = tuple(algebras)
        self._terms = _accumulate(terms)

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def sort_key(self, pair):
        a, b = pair
        return (
            key_degree(self.algebras[0], a),
            key_degree(self.algebras[1], b),
            a,
            b,
        )

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda kc: self.sort_key(kc[0]))

    def coefficient(self, a, b):
        return self._terms.get((a, b), 0)

    def flip(self) -> "Tensor2":
        return Tensor2(self.algebras[::-1], [((b, a), c) for (a, b), c in self._terms.items()])

    def map_coefficients(self, fn) -> "Tensor2":
        return Tensor2(self.algebras, [(k, fn(c)) for k, c in self._terms.items()])

    def __add__(self, other):
        if isinstance(other, Tensor2):
            return Tensor2(self.algebras, list(self._terms.items()) + list(other._terms.items()))
        return NotImplemented

    def __neg__(self):
        return Tensor2(self.algebras, [(k, -c) for k, c in self._terms.items()])

    def __sub__(self, other):
        if isinstance(other, Tensor2):
            return self + (-other)
        return NotImplemented

    def __mul__(self, scalar):
        if isinstance(scalar, (Element, Tensor2)):
            return NotImplemented
        return Tensor2(self.algebras, [(k, c * scalar) for k, c in self._terms.items()])

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Tensor2):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        from .render import render_tensor

        return f"<{self.algebras[0]}(x){self.algebras[1]}: {render_tensor(self)}>"


def tensor(x: Element, y: Element) -> Tensor2:
    """Elementary tensor x (x) y."""
    return Tensor2(
        (x.algebra, y.algebra),
        [((a, b), ca * cb) for a, ca in x.terms.items() for b, cb in y.terms.items()],
    )
