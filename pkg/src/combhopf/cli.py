"""Command-line front end: products, coproducts, basis changes, normal forms,
dimension tables and verification suites."""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from . import __version__
from .combinat.enumerate import count
from .combinat.partitions import partitions, set_partitions
from .combinat.words import parse_word
from .element import Element, Tensor2
from .errors import (
    AlgebraMismatchError,
    BudgetExceededError,
    CombHopfError,
    CongruenceGradingError,
    InvariantViolation,
    ParseError,
    UnknownAlgebraError,
)
from .hopf import coproduct_element, get_algebra, multiply
from .render import element_json, parse_expression, parse_scalar, render_element, render_tensor, tensor_json
from .scalar import Q, QPoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(CombHopfError):
    pass


# ------------------------------------------------------------------ helpers


def _q_value(text: str | None):
    """None keeps the algebra's default; a formal q is returned as the marker 'formal'."""
    if text is None:
        return None
    value = parse_scalar(text)
    if isinstance(value, QPoly) and value == Q:
        return "formal"
    if isinstance(value, QPoly):
        raise UsageError("--q must be q, an integer or a fraction")
    return value


def _to_monomial(x: Element) -> Element:
    from .quantum import QSYM_Q_F, fundamental_to_monomial

    if x.algebra != QSYM_Q_F:
        return x
    acc = Element("QSym_q")
    for k, c in x.terms.items():
        acc = acc + fundamental_to_monomial(k, c)
    return acc


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        payload = element_json(obj) if isinstance(obj, Element) else tensor_json(obj)
        print(json.dumps(payload, sort_keys=True))
    else:
        print(render_element(obj) if isinstance(obj, Element) else render_tensor(obj))


def _specialize(obj, q):
    from .scalar import specialize

    cls = Tensor2 if isinstance(obj, Tensor2) else Element
    tag = obj.algebras[0] if isinstance(obj, Tensor2) else obj.algebra
    return cls(tag, [(k, specialize(c, q)) for k, c in obj.terms.items()])


# ----------------------------------------------------------------- commands


def cmd_product(args) -> int:
    x = _to_monomial(parse_expression(args.left))
    y = _to_monomial(parse_expression(args.right, default_algebra=x.algebra))
    if x.algebra != y.algebra:
        raise AlgebraMismatchError(f"cannot multiply {x.algebra} by {y.algebra}")
    alg = get_algebra(x.algebra)
    q = _q_value(args.q)
    out = multiply(alg, x, y)
    if q not in (None, "formal"):
        out = _specialize(out, q)
    _emit(out, args.format)
    return EXIT_OK


def cmd_coproduct(args) -> int:
    x = _to_monomial(parse_expression(args.expr))
    alg = get_algebra(x.algebra)
    q = _q_value(args.q)
    if q is not None and alg.q_coproduct is not None:
        qq = None if q == "formal" else q
        acc = Tensor2(alg.tag)
        for k, c in x.terms.items():
            acc = acc + c * Tensor2(alg.tag, alg.q_coproduct(k, qq).terms)
        out = acc
    else:
        out = coproduct_element(alg, x)
        if q not in (None, "formal"):
            out = _specialize(out, q)
    _emit(out, args.format)
    return EXIT_OK


_CONVERSIONS = {}


def _conversions():
    if not _CONVERSIONS:
        from . import phisym, quantum

        _CONVERSIONS.update(
            {
                (phisym.PHISYM, "Sprime"): phisym.phi_to_sprime,
                (phisym.PHISYM, "Ssec"): phisym.phi_to_ssec,
                (phisym.SPRIME, "phi"): phisym.sprime_to_phi,
                (phisym.SSEC, "phi"): phisym.ssec_to_phi,
                (phisym.SPRIME, "Ssec"): lambda x: phisym.phi_to_ssec(phisym.sprime_to_phi(x)),
                (phisym.SSEC, "Sprime"): lambda x: phisym.phi_to_sprime(phisym.ssec_to_phi(x)),
                (phisym.PHISYM, "Y"): phisym.phi_to_y,
                (phisym.YBASIS, "m"): phisym.y_to_m,
                (quantum.FQSYM, "M"): lambda x: quantum.phi_map(Element(quantum.FQSYM_Q, x.terms)),
                (quantum.FQSYM_Q, "M"): quantum.phi_map,
                (quantum.QSYM_Q_F, "M"): _to_monomial,
            }
        )
    return _CONVERSIONS


def cmd_convert(args) -> int:
    x = parse_expression(args.expr)
    fn = _conversions().get((x.algebra, args.to))
    if fn is None:
        raise UsageError(f"no conversion from {x.algebra} to basis {args.to!r}")
    _emit(fn(x), args.format)
    return EXIT_OK


def cmd_normal_form(args) -> int:
    from .combinat.words import format_word
    from .quantum import q_hypoplactic_normal_form, q_sylvester_normal_form

    w = parse_word(args.word)
    fn = q_sylvester_normal_form if args.kind == "sylvester" else q_hypoplactic_normal_form
    rep, e = fn(w)
    if args.format == "json":
        print(json.dumps({"word": format_word(w), "kind": args.kind, "normal_form": format_word(rep), "exponent": e}, sort_keys=True))
    else:
        print(f"{format_word(rep)} q^{e}")
    return EXIT_OK


def _dims_table(name: str, n_max: int) -> dict:
    from .parking import forest_basis, upg_basis
    from .series import catalan, lie_dims_from_generators

    ns = range(1, n_max + 1)
    connected_perms = lambda: [count("connected_permutations", n) for n in ns]  # noqa: E731
    connected_endos = lambda: [count("connected_endofunctions", n) for n in ns]  # noqa: E731
    table: dict = {}
    if name in ("EQSym", "ESym"):
        table["dims"] = [count("endofunctions", n) for n in ns]
        table["generators"] = connected_endos()
    elif name == "L(ESym)":
        table["dims"] = lie_dims_from_generators(connected_endos(), n_max)
    elif name in ("SGQSym", "SGSym", "PhiSym", "FQSym", "FQSym_q", "FQSym-0"):
        table["dims"] = [factorial(n) for n in ns]
        table["generators"] = connected_perms()
    elif name in ("L(SGSym)", "L(PhiSym)"):
        table["dims"] = lie_dims_from_generators(connected_perms(), n_max)
    elif name == "CPQSym":
        table["dims"] = [count("parking_functions", n) for n in ns]
    elif name == "CCQSym":
        table["dims"] = [count("nondecreasing_parking_functions", n) for n in ns]
        if table["dims"] != [catalan(n) for n in ns]:
            raise InvariantViolation("nondecreasing parking functions are not Catalan")
    elif name == "UPG":
        if n_max > 5:
            raise BudgetExceededError("UPG dimensions are enumerated up to n = 5")
        table["dims"] = [len(upg_basis(n)) for n in ns]
    elif name == "Forest":
        if n_max > 12:
            raise BudgetExceededError("forest dimensions are enumerated up to n = 12")
        table["dims"] = [len(forest_basis(n)) for n in ns]
    elif name == "SGQSym-inv":
        table["dims"] = [count("involutions", n) for n in ns]
    elif name == "PiQSym":
        if n_max > 10:
            raise BudgetExceededError("set partitions are enumerated up to n = 10")
        table["dims"] = [sum(1 for _ in set_partitions(n)) for n in ns]
    elif name in ("QSym_q", "NCSF_q", "QSym-emb"):
        table["dims"] = [2 ** (n - 1) for n in ns]
    elif name in ("Sym", "PhiSym-Y", "Sym-emb"):
        table["dims"] = [sum(1 for _ in partitions(n)) for n in ns]
    else:
        raise UnknownAlgebraError(f"no dimension table for {name!r}")
    return table


def cmd_dims(args) -> int:
    if args.n_max < 1:
        raise UsageError("n_max must be positive")
    table = _dims_table(args.algebra, args.n_max)
    if args.format == "json":
        print(json.dumps({"algebra": args.algebra, **table}, sort_keys=True))
    else:
        for key, values in table.items():
            print(f"{args.algebra} {key}: {','.join(map(str, values))}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import suites

    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        kw: dict = {}
        if name == "hopf-axioms":
            kw["max_degree"] = args.degree or 3
        elif name == "oracle":
            kw["max_degree"] = args.degree or 4
            kw["N"] = args.truncation or 8
        elif name == "dims":
            kw["n_max"] = args.degree or 5
        elif name == "duality":
            kw["max_degree"] = args.degree or 4
        elif name == "quantum":
            d = args.degree or 5
            kw.update(max_degree=d, phi_degree=min(d, 4), class_degree=d, primitive_degree=d, expected_primitives=None)
        reports.append(suites.SUITES[name](**kw))
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "passed": ok,
            "suites": [
                {"suite": r.name, "passed": r.passed, "checks": [{"check": c, "passed": p, "detail": d} for c, p, d in r.entries]}
                for r in reports
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in reports:
            print(f"[{r.name}]")
            for line in r.lines():
                print(f"  {line}")
        print("all checks passed" if ok else "some checks FAILED")
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------------- parser


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # subcommands must not reset options already given before the command name
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=d("text"))
    common.add_argument("--q", default=d(None), help="q, an integer or a fraction (default: the algebra's own)")
    common.add_argument("--truncation", type=int, default=d(None), help="number of variables for oracle realizations")
    common.add_argument("--degree", type=int, default=d(None), help="maximal total degree for verification suites")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options(suppress=True)
    p = argparse.ArgumentParser(prog="combhopf", description=__doc__, parents=[_common_options(suppress=False)])
    p.add_argument("--version", action="version", version=f"combhopf {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("product", parents=[common], help="multiply two expressions")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("coproduct", parents=[common], help="coproduct of an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_coproduct)

    s = sub.add_parser("convert", parents=[common], help="change of basis")
    s.add_argument("expr")
    s.add_argument("--to", required=True, help="target basis: phi, Sprime, Ssec, Y, m or M")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("normal-form", parents=[common], help="q-congruence normal form of a word")
    s.add_argument("word")
    s.add_argument("--kind", choices=("sylvester", "hypoplactic"), default="sylvester")
    s.set_defaults(func=cmd_normal_form)

    s = sub.add_parser("dims", parents=[common], help="graded dimensions")
    s.add_argument("algebra")
    s.add_argument("n_max", type=int)
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("suite", choices=("hopf-axioms", "oracle", "dims", "duality", "quantum", "all"))
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, UnknownAlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (AlgebraMismatchError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CongruenceGradingError, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
