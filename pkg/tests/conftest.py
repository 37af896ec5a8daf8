import pytest

from combhopf.element import Tensor2
from combhopf.render import parse_expression, parse_scalar
from combhopf.combinat.words import parse_word

ACCEPTANCE_LINES: dict[int, str] = {}


def el(text: str, algebra: str):
    """Parse 'M:133 + 2*M:323' in the given algebra."""
    return parse_expression(text, algebra)


def tens(algebra: str, *terms):
    """Tensor from (coeff, left, right) triples; '' is the unit and coeff may be 'q^3'."""
    out = []
    for c, a, b in terms:
        coeff = parse_scalar(c) if isinstance(c, str) else c
        out.append(((parse_word(a) if a else (), parse_word(b) if b else ()), coeff))
    return Tensor2(algebra, out)


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES[criterion] = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({detail})"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
