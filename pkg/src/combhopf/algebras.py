"""Registration of the built-in algebras and their printable bases."""

from __future__ import annotations

from collections import Counter
from itertools import product as iproduct
from math import comb, prod

from . import eqsym, parking, phisym, quantum, sgqsym
from .combinat.graphs import (
    forest_code,
    forest_representative,
    forest_size,
    graph_code,
    graph_representative,
    graph_size,
)
from .combinat.partitions import compositions, partitions, set_partitions, sort_partition, union
from .combinat.words import format_word, parse_word
from .element import Element, Tensor2, register_degree
from .hopf import Algebra, register
from .render import (
    format_set_partition,
    parse_composition,
    parse_partition,
    parse_set_partition,
    register_basis,
)

SYM_P = "Sym-p"


def _comps(n: int) -> list:
    return list(compositions(n))


def _parts(n: int) -> list:
    return list(partitions(n))


def _setparts(n: int) -> list:
    return list(set_partitions(n)) if n else [()]


def _set_partition_degree(key) -> int:
    return sum(len(b) for b in key)


def _retag(fn, tag: str):
    """Wrap a structure map so its output carries ``tag``."""

    def wrapped(*args):
        out = fn(*args)
        cls = Tensor2 if isinstance(out, Tensor2) else Element
        return cls(tag, out.terms)

    return wrapped


# ------------------------------------------------------------ symmetric functions


def _sub_multisets(lam):
    counts = sorted(Counter(lam).items(), reverse=True)
    for picks in iproduct(*(range(m + 1) for _, m in counts)):
        left = sort_partition([p for (p, _), k in zip(counts, picks) for _ in range(k)])
        right = sort_partition([p for (p, m), k in zip(counts, picks) for _ in range(m - k)])
        weight = prod(comb(m, k) for (_, m), k in zip(counts, picks))
        yield left, right, weight


def sym_m_product(lam, mu) -> Element:
    from .oracle.symfun import sym_monomial_product

    return sym_monomial_product(lam, mu)


def sym_m_coproduct(lam) -> Tensor2:
    """Delta m_lam = sum over multiset splittings lam = mu u nu of m_mu (x) m_nu."""
    return Tensor2(phisym.SYM_M, [((a, b), 1) for a, b, _ in _sub_multisets(sort_partition(lam))])


def sym_p_product(lam, mu) -> Element:
    return Element.basis(SYM_P, union(lam, mu))


def sym_p_coproduct(lam) -> Tensor2:
    """Power sums are primitive; a product of them splits with binomial weights."""
    return Tensor2(SYM_P, [((a, b), w) for a, b, w in _sub_multisets(sort_partition(lam))])


# ----------------------------------------------------------- key codecs for graphs


def _format_graph(code) -> str:
    return format_word(graph_representative(code))


def _parse_graph(text: str):
    return graph_code(parse_word(text))


def _format_forest(code) -> str:
    return format_word(forest_representative(code))


def _parse_forest(text: str):
    return forest_code(parse_word(text))


# ---------------------------------------------------------------- registration


def _reg(tag, name, basis, degree, product, coproduct, *, fmt=format_word, parse=parse_word, algebra=None, **kw):
    register(Algebra(tag, name, basis, degree, product, coproduct, **kw))
    register_basis(tag, name, algebra or tag, fmt, parse)


_reg(eqsym.EQSYM, "M", eqsym.basis, len, eqsym.eqsym_product, eqsym.eqsym_coproduct, commutative=True,
     description="endofunctions, M basis")
_reg(eqsym.ESYM, "S", eqsym.basis, len, eqsym.esym_product, eqsym.esym_coproduct, cocommutative=True,
     description="graded dual of EQSym, S basis")

_reg(sgqsym.SGQSYM, "M", sgqsym.basis, len, sgqsym.sg_product, sgqsym.sg_coproduct, commutative=True,
     description="permutations, M basis")
_reg(sgqsym.SGSYM, "S", sgqsym.basis, len, sgqsym.sgsym_product, sgqsym.sgsym_coproduct, cocommutative=True,
     description="graded dual of SGQSym")
_reg(sgqsym.PIQSYM, "u_pi", _setparts, _set_partition_degree, sgqsym.pi_product,
     lambda k: sgqsym.coarse_coproduct("u_pi", k), fmt=format_set_partition, parse=parse_set_partition,
     commutative=True, description="set partitions of cycle supports")
_reg(sgqsym.QSYM_EMB, "uq", _comps, sum, sgqsym.uq_product, lambda k: sgqsym.coarse_coproduct("uq", k),
     fmt=format_word, parse=parse_composition, commutative=True, description="ordered cycle types")
_reg(sgqsym.SYM_EMB, "ul", _parts, sum, sgqsym.ul_product, lambda k: sgqsym.coarse_coproduct("ul", k),
     fmt=format_word, parse=parse_partition, commutative=True, description="cycle types")


def _involutions(n: int) -> list:
    return [s for s in sgqsym.basis(n) if sgqsym.is_involution(s)]


_reg(sgqsym.INVOLUTIVE, "M", _involutions, len, _retag(sgqsym.sg_product, sgqsym.INVOLUTIVE),
     _retag(sgqsym.sg_coproduct, sgqsym.INVOLUTIVE), commutative=True, description="involutions in SGQSym")

_reg(phisym.PHISYM, "phi", phisym.basis, len, phisym.phi_product, phisym.phi_coproduct, cocommutative=True,
     description="permutations as cycle sets, phi basis")
_reg(phisym.SPRIME, "Sprime", phisym.basis, len, phisym.sprime_product, phisym.sprime_coproduct,
     cocommutative=True, algebra=phisym.PHISYM, description="PhiSym, S' basis")
_reg(phisym.SSEC, "Ssec", phisym.basis, len, phisym.ssec_product, phisym.ssec_coproduct,
     cocommutative=True, algebra=phisym.PHISYM, description="PhiSym, S'' basis")
_reg(phisym.YBASIS, "Y", _parts, sum, phisym.y_product, phisym.y_coproduct, fmt=format_word,
     parse=parse_partition, algebra=phisym.PHISYM, commutative=True, cocommutative=True,
     description="PhiSym modulo cycle type")
_reg(phisym.SYM_M, "m", _parts, sum, sym_m_product, sym_m_coproduct, fmt=format_word, parse=parse_partition,
     algebra="Sym", commutative=True, cocommutative=True, description="symmetric functions, monomial basis")
_reg(SYM_P, "p", _parts, sum, sym_p_product, sym_p_coproduct, fmt=format_word, parse=parse_partition,
     algebra="Sym", commutative=True, cocommutative=True, description="symmetric functions, power sums")

_reg(parking.CPQSYM, "M", parking.cpq_basis, len, parking.cpq_product, parking.cpq_coproduct, commutative=True,
     description="parking functions")
_reg(parking.CCQSYM, "M", parking.ccq_basis, len, parking.ccq_product, parking.ccq_coproduct, commutative=True,
     description="nondecreasing parking functions")
_reg(parking.UPG, "U", parking.all_graph_codes, graph_size, parking.unlabelled_product,
     parking.unlabelled_coproduct, fmt=_format_graph, parse=_parse_graph, commutative=True, cocommutative=True,
     description="unlabelled functional graphs")
_reg(parking.FOREST, "M", parking.forest_basis, forest_size, parking.forest_basis_product,
     parking.forest_basis_coproduct, fmt=_format_forest, parse=_parse_forest, commutative=True,
     description="rooted forests inside CCQSym")

_reg(quantum.FQSYM, "F", quantum.fqsym_basis, len, lambda a, b: quantum.fqsym_product(a, b, quantum.FQSYM),
     quantum.fqsym_coproduct, q_coproduct=lambda s, q: quantum.delta_q(s, q, quantum.FQSYM),
     description="free quasi-symmetric functions")
_reg(quantum.FQSYM_Q, "F", quantum.fqsym_basis, len, quantum.fqsym_product, quantum.delta_q, twisted=True,
     q_coproduct=lambda s, q: quantum.delta_q(s, q), description="FQSym with the q-coproduct")
_reg(quantum.FQSYM_ZERO, "F", quantum.fqsym_basis, len, quantum.fqsym_zero_product,
     quantum.delta_zero_coproduct, cocommutative=True,
     q_coproduct=lambda s, q: quantum.delta_zero_family(s, q), description="FQSym with the q=0 family")
_reg(quantum.QSYM_Q, "M", quantum.composition_basis, sum, quantum.qsymq_product, quantum.qsymq_coproduct,
     twisted=True, q_product=quantum.qsymq_product, parse=parse_composition, description="quasi-symmetric functions in q-commuting letters")
register_basis(quantum.QSYM_Q_F, "F", quantum.QSYM_Q, format_word, parse_composition)
register_degree(quantum.QSYM_Q_F, sum)
_reg(quantum.NCSF_Q, "S", quantum.composition_basis, sum, quantum.ncsfq_product, quantum.ncsfq_coproduct,
     twisted=True, q_coproduct=quantum.ncsfq_coproduct, fmt=format_word, parse=parse_composition,
     description="noncommutative symmetric functions with the q-coproduct")
