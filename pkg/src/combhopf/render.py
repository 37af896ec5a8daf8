"""Text encoding of elements and tensors, and the matching expression parser.

Grammar (whitespace-insensitive between terms)::

    expr  := term (("+" | "-") term)*
    term  := [coeff "*"] basis ["[" algebra "]"] ":" key  |  coeff
    coeff := integer, fraction a/b, or a q-polynomial, parenthesized when it has several terms

A bare coefficient denotes that multiple of the unit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable

import sympy

from .combinat.words import format_word, parse_word
from .element import Element, Tensor2, key_degree
from .errors import ParseError, UnknownAlgebraError
from .scalar import QPoly, normalize, scalar_str

Key = Hashable


@dataclass(frozen=True)
class BasisSpec:
    tag: str
    name: str
    algebra: str
    fmt: Callable[[Key], str]
    parse: Callable[[str], Key]


_BY_TAG: dict[str, BasisSpec] = {}
_BY_NAME: dict[tuple[str, str], BasisSpec] = {}


def register_basis(tag: str, name: str, algebra: str, fmt=format_word, parse=parse_word) -> BasisSpec:
    spec = BasisSpec(tag, name, algebra, fmt, parse)
    _BY_TAG[tag] = spec
    _BY_NAME[(name, algebra)] = spec
    return spec


def _ensure_loaded() -> None:
    from . import algebras  # noqa: F401


def basis_spec(tag: str) -> BasisSpec:
    if tag not in _BY_TAG:
        _ensure_loaded()
    spec = _BY_TAG.get(tag)
    if spec is None:
        return BasisSpec(tag, tag, tag, format_word, parse_word)
    return spec


def lookup_basis(name: str, algebra: str | None) -> BasisSpec:
    _ensure_loaded()
    if algebra is None:
        hits = [s for (n, _), s in _BY_NAME.items() if n == name]
        if len(hits) == 1:
            return hits[0]
        raise ParseError(f"basis {name!r} needs an explicit [algebra]")
    spec = _BY_NAME.get((name, algebra))
    if spec is None and algebra in _BY_TAG and _BY_TAG[algebra].name == name:
        spec = _BY_TAG[algebra]
    if spec is None:
        raise UnknownAlgebraError(f"unknown basis {name}[{algebra}]")
    return spec


# --------------------------------------------------------------- key codecs


def format_set_partition(blocks) -> str:
    return "{" + "|".join(format_word(b) for b in blocks) + "}"


def parse_set_partition(text: str):
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"set partition must look like {{1,2|3}}, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    blocks = [tuple(sorted(parse_word(b, compact=False))) for b in body.split("|")]
    return tuple(sorted(blocks))


def parse_partition(text: str):
    return tuple(sorted(parse_word(text, compact=False), reverse=True))


def parse_composition(text: str):
    return parse_word(text, compact=False)


# --------------------------------------------------------------- rendering


def _term(coeff, name: str, key_text: str, is_unit: bool) -> tuple[str, str]:
    """(sign, body) for one term."""
    c = normalize(coeff)
    neg = False
    if isinstance(c, (int, Fraction)) and c < 0:
        neg, c = True, -c
    elif isinstance(c, QPoly) and len([x for x in c.coeffs if x]) == 1 and c.coeffs[-1] < 0:
        neg, c = True, -c
    base = "1" if is_unit else f"{name}:{key_text}"
    if c == 1:
        body = base
    elif is_unit:
        body = scalar_str(c)
    else:
        body = f"{scalar_str(c)}*{base}"
    return ("-" if neg else "+"), body


def _join(parts: list[tuple[str, str]]) -> str:
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_key(tag: str, key) -> str:
    spec = basis_spec(tag)
    if key_degree(tag, key) == 0:
        return "1"
    return f"{spec.name}:{spec.fmt(key)}"


def render_element(x: Element) -> str:
    spec = basis_spec(x.algebra)
    parts = [_term(c, spec.name, spec.fmt(k), x.degree_of(k) == 0) for k, c in x.items()]
    return _join(parts)


def render_tensor(t: Tensor2) -> str:
    sa, sb = basis_spec(t.algebras[0]), basis_spec(t.algebras[1])
    parts = []
    for (a, b), c in t.items():
        left = render_key(sa.tag, a)
        right = render_key(sb.tag, b)
        sign, body = _term(c, "", "", True)
        pair = f"{left} (x) {right}"
        parts.append((sign, pair if body == "1" else f"{body}*{pair}"))
    return _join(parts)


def element_json(x: Element) -> dict:
    spec = basis_spec(x.algebra)
    return {
        "algebra": spec.algebra,
        "basis": spec.name,
        "terms": [{"key": spec.fmt(k), "coeff": str(normalize(c))} for k, c in x.items()],
    }


def tensor_json(t: Tensor2) -> dict:
    sa, sb = basis_spec(t.algebras[0]), basis_spec(t.algebras[1])
    return {
        "algebra": [sa.algebra, sb.algebra],
        "basis": [sa.name, sb.name],
        "terms": [{"key": [sa.fmt(a), sb.fmt(b)], "coeff": str(normalize(c))} for (a, b), c in t.items()],
    }


# --------------------------------------------------------------- parsing

_Q = sympy.Symbol("q")


def parse_scalar(text: str):
    """Integer, fraction or integer q-polynomial."""
    text = text.strip()
    if not text:
        raise ParseError("empty coefficient")
    try:
        expr = sympy.sympify(text.replace("^", "**"), locals={"q": _Q})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ParseError(f"bad coefficient {text!r}") from exc
    if expr.free_symbols - {_Q}:
        raise ParseError(f"unknown symbol in coefficient {text!r}")
    if not expr.free_symbols:
        if not expr.is_Rational:
            raise ParseError(f"non-rational coefficient {text!r}")
        return normalize(Fraction(int(expr.p), int(expr.q)))
    poly = sympy.Poly(sympy.expand(expr), _Q)
    coeffs = poly.all_coeffs()[::-1]
    if not all(c.is_Integer for c in coeffs):
        raise ParseError(f"q-polynomial coefficients must be integers: {text!r}")
    return normalize(QPoly([int(c) for c in coeffs]))


def _split_terms(text: str) -> list[tuple[int, str]]:
    out, depth, cur, sign = [], 0, "", 1
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip() and not cur.rstrip().endswith("*"):
            out.append((sign, cur.strip()))
            cur, sign = "", (1 if ch == "+" else -1)
            continue
        if depth == 0 and ch == "-" and not cur.strip():
            sign = -sign
            continue
        if depth == 0 and ch == "+" and not cur.strip():
            continue
        cur += ch
    if cur.strip():
        out.append((sign, cur.strip()))
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    return out


_TERM = re.compile(r"^(?:(?P<coeff>.+?)\*)?(?P<basis>[A-Za-z_][A-Za-z0-9_']*)(?:\[(?P<alg>[^\]]+)\])?:(?P<key>.*)$", re.S)


def parse_expression(text: str, default_algebra: str | None = None) -> Element:
    """Parse a linear combination; returns an Element under the internal tag."""
    if not text.strip():
        raise ParseError("empty expression")
    basis_terms, scalars = [], []
    tags = set()
    for sign, chunk in _split_terms(text):
        m = _TERM.match(chunk)
        if m is None or ":" not in chunk:
            scalars.append(sign * parse_scalar(chunk))
            continue
        spec = lookup_basis(m["basis"], m["alg"] or default_algebra)
        coeff = parse_scalar(m["coeff"]) if m["coeff"] else 1
        try:
            key = spec.parse(m["key"])
        except ParseError:
            raise
        except Exception as exc:
            raise ParseError(f"bad key {m['key']!r} for {spec.name}[{spec.algebra}]") from exc
        tags.add(spec.tag)
        basis_terms.append((spec.tag, key, sign * coeff))
    if len(tags) > 1:
        from .errors import AlgebraMismatchError

        raise AlgebraMismatchError(f"expression mixes algebras {sorted(tags)}")
    if tags:
        tag = tags.pop()
    elif default_algebra is not None:
        tag = lookup_basis_any(default_algebra).tag
    else:
        tag = None
    if tag is None:
        raise ParseError("a pure scalar needs a basis context")
    unit = _unit_of(tag)
    terms = [(k, c) for _, k, c in basis_terms] + [(unit, c) for c in scalars]
    return Element(tag, terms)


def lookup_basis_any(algebra_or_tag: str) -> BasisSpec:
    _ensure_loaded()
    if algebra_or_tag in _BY_TAG:
        return _BY_TAG[algebra_or_tag]
    for (name, alg), spec in _BY_NAME.items():
        if alg == algebra_or_tag:
            return spec
    raise UnknownAlgebraError(f"unknown algebra {algebra_or_tag!r}")


def _unit_of(tag: str):
    from .hopf import get_algebra

    try:
        return get_algebra(tag).unit
    except UnknownAlgebraError:
        return ()
