"""Structure constants of the x_ij realizations against the combinatorial rules."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from ..combinat.enumerate import enumerate_family
from ..element import Element
from ..errors import UnknownAlgebraError
from .xpoly import expand_M, poly_mul, reidentify

# algebra tag -> (basis family, relation modes, combinatorial product)
_SETUPS = {}


def _setups():
    if not _SETUPS:
        from ..eqsym import eqsym_product
        from ..parking import ccq_product, cpq_product
        from ..sgqsym import sg_product

        _SETUPS.update(
            {
                "EQSym": ("endofunctions", (), eqsym_product),
                "CPQSym": ("parking_functions", (), cpq_product),
                "SGQSym": ("permutations", ("column",), sg_product),
                "SGQSym-inv": ("involutions", ("column", "chain"), sg_product),
                "CCQSym": ("nondecreasing_parking_functions", ("order",), ccq_product),
            }
        )
    return _SETUPS


def oracle_product(algebra: str, f, g, N: int):
    family, modes, _ = _setups()[algebra]
    p = poly_mul(expand_M(f, modes, N), expand_M(g, modes, N), modes)
    return reidentify(p, algebra, modes, N)


@dataclass
class OracleReport:
    algebra: str
    max_degree: int
    truncations: tuple[int, ...]
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_structure_constants(algebra: str, max_degree: int = 4, N: int = 8, *, second_N: int | None = None) -> OracleReport:
    """Every pair of total degree <= max_degree: realize, multiply in the quotient,
    re-identify (consuming every monomial) and compare; repeated at a second truncation."""
    setups = _setups()
    if algebra not in setups:
        raise UnknownAlgebraError(f"no x_ij oracle for {algebra!r}")
    family, modes, rule = setups[algebra]
    if second_N is None:
        second_N = max_degree
    truncations = tuple(sorted({N, second_N}))
    if min(truncations) < max_degree:
        raise ValueError("truncation must be at least the total degree")
    rep = OracleReport(algebra, max_degree, truncations)
    keys = {d: list(enumerate_family(family, d)) for d in range(1, max_degree)}
    for d1 in range(1, max_degree):
        for d2 in range(1, max_degree - d1 + 1):
            for f, g in iproduct(keys[d1], keys[d2]):
                expected = Element(algebra, rule(f, g).terms)
                for n in truncations:
                    rep.checked += 1
                    got = oracle_product(algebra, f, g, n)
                    if not got.ok or got.element != expected:
                        rep.failures.append({"f": f, "g": g, "N": n, "leftover": got.leftover[:3]})
    return rep
