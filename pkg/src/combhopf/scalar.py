"""Exact scalars: Python ``int``, ``fractions.Fraction`` and integer polynomials in q.

Integers promote to either Fraction or QPoly on demand; a Fraction never meets a
QPoly (no rational functions of q are ever needed).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import ScalarMixError

Scalar = Union[int, Fraction, "QPoly"]


class QPoly:
    """Polynomial in one formal variable q with integer coefficients.

    ``coeffs[k]`` is the coefficient of q**k; trailing zeros are stripped so the
    zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def q(cls, power: int = 1, coeff: int = 1) -> "QPoly":
        if power < 0:
            raise ValueError("negative power of q")
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, value):
        """Evaluate (Horner); ``value`` may be an int, Fraction or QPoly."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, bool):
            return QPoly([int(other)])
        if isinstance(other, int):
            return QPoly([other])
        if isinstance(other, Fraction):
            if other.denominator == 1:
                return QPoly([other.numerator])
            raise ScalarMixError("cannot mix a Rational scalar with a q-polynomial")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return QPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = QPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, int) and other != 0 and all(c % other == 0 for c in self.coeffs):
            return QPoly([c // other for c in self.coeffs])
        raise ScalarMixError("q-polynomials only support exact integer division")

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, QPoly) else other
        if o is NotImplemented:
            return False
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash(("QPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = str(abs(c))
            else:
                var = "q" if k == 1 else f"q^{k}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


Q = QPoly.q()


def normalize(c):
    """Canonical representative: integral Fractions and constant QPolys become int."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, QPoly) and c.is_constant():
        return c.constant()
    return c


def q_power(k: int, q=None):
    """q**k, for a formal q (``None``) or a specialised value."""
    if q is None:
        return QPoly.q(k)
    return q ** k


def specialize(c, value):
    """Substitute q = value in a scalar (identity on int/Fraction)."""
    if isinstance(c, QPoly):
        return normalize(c(value))
    return c


def scalar_str(c) -> str:
    c = normalize(c)
    if isinstance(c, QPoly):
        return f"({c})" if len([x for x in c.coeffs if x]) > 1 else str(c)
    return str(c)
