"""PhiSym: the cocommutative Hopf algebra on the phi basis, its S' and S'' bases,
and the quotient by cycle type, which is Sym."""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .combinat.cycles import (
    Cycle,
    cycle_decomposition,
    cycle_type,
    iterated_matching_product,
    matching_product,
    permutation_from_cycles,
)
from .combinat.enumerate import enumerate_family
from .combinat.partitions import multiplicities, sort_partition
from .combinat.words import Word, connected_factorization, shifted_concat, split_points
from .element import Element, Tensor2
from .eqsym import unshuffle_constants
from .errors import InvariantViolation

PHISYM = "PhiSym"
SPRIME = "PhiSym-Sprime"
SSEC = "PhiSym-Ssec"
YBASIS = "PhiSym-Y"
SYM_M = "Sym-m"


@lru_cache(maxsize=65536)
def _phi_product_keys(alpha: Word, beta: Word) -> tuple[Word, ...]:
    n = len(alpha)
    c1 = cycle_decomposition(alpha)
    c2 = tuple(c.shifted(n) for c in cycle_decomposition(beta))
    total = n + len(beta)
    return tuple(sorted(permutation_from_cycles(cs, total) for cs in matching_product(c1, c2)))


def phi_product(alpha: Word, beta: Word) -> Element:
    """Sum of phi_sigma over cycle sets in the matching product; coefficients 0 or 1."""
    return Element(PHISYM, [(s, 1) for s in _phi_product_keys(tuple(alpha), tuple(beta))])


def phi_coproduct(sigma: Word) -> Tensor2:
    """Unshuffle of cycles: standardize a cycle subset and its complement."""
    return Tensor2(PHISYM, unshuffle_constants(tuple(sigma)))


def basis(n: int) -> list[Word]:
    return list(enumerate_family("permutations", n))


def is_phi_primitive(sigma: Word) -> bool:
    return len(cycle_decomposition(sigma)) == 1


def multiply_phi(x: Element, y: Element) -> Element:
    acc: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for s in _phi_product_keys(a, b):
                acc[s] = acc.get(s, 0) + ca * cb
    return Element(PHISYM, acc)


# ----------------------------------------------------------------- S' basis


@lru_cache(maxsize=None)
def _sprime(sigma: Word) -> Element:
    acc = Element.basis(PHISYM, ())
    for factor in connected_factorization(sigma):
        acc = multiply_phi(acc, Element.basis(PHISYM, factor))
    return acc


def sprime_expand(sigma: Word) -> Element:
    """S'_sigma: product of phi over the connected factors of sigma."""
    return _sprime(tuple(sigma))


@lru_cache(maxsize=None)
def _phi_in_sprime(sigma: Word) -> Element:
    # S'_sigma = phi_sigma + terms whose split points are a proper subset of sigma's
    acc = Element.basis(SPRIME, sigma)
    for tau, c in _sprime(sigma).terms.items():
        if tau == sigma:
            if c != 1:
                raise InvariantViolation(f"S' change of basis not unitriangular at {sigma}")
            continue
        if not set(split_points(tau)) < set(split_points(sigma)):
            raise InvariantViolation(f"S' change of basis not triangular at {sigma}: {tau}")
        acc = acc - c * _phi_in_sprime(tau)
    return acc


def phi_to_sprime(x: Element) -> Element:
    acc = Element(SPRIME)
    for s, c in x.terms.items():
        acc = acc + c * _phi_in_sprime(s)
    return acc


def sprime_to_phi(x: Element) -> Element:
    acc = Element(PHISYM)
    for s, c in x.terms.items():
        acc = acc + c * _sprime(s)
    return acc


# ---------------------------------------------------------------- S'' basis


@lru_cache(maxsize=None)
def _ssec(sigma: Word) -> Element:
    cycles = cycle_decomposition(sigma)
    sets = iterated_matching_product([(c,) for c in cycles])
    return Element(PHISYM, [(permutation_from_cycles(cs, len(sigma)), 1) for cs in sets])


def ssec_expand(sigma: Word) -> Element:
    """S''_sigma: iterated matching product of the single cycles of sigma."""
    return _ssec(tuple(sigma))


@lru_cache(maxsize=None)
def _phi_in_ssec(sigma: Word) -> Element:
    # S''_sigma = phi_sigma + terms with strictly fewer cycles
    k = len(cycle_decomposition(sigma))
    acc = Element.basis(SSEC, sigma)
    for tau, c in _ssec(sigma).terms.items():
        if tau == sigma:
            continue
        if len(cycle_decomposition(tau)) >= k:
            raise InvariantViolation(f"S'' change of basis not triangular at {sigma}: {tau}")
        acc = acc - c * _phi_in_ssec(tau)
    return acc


def phi_to_ssec(x: Element) -> Element:
    acc = Element(SSEC)
    for s, c in x.terms.items():
        acc = acc + c * _phi_in_ssec(s)
    return acc


def ssec_to_phi(x: Element) -> Element:
    acc = Element(PHISYM)
    for s, c in x.terms.items():
        acc = acc + c * _ssec(s)
    return acc


def _convert_tensor(t: Tensor2, conv, tag: str) -> Tensor2:
    acc: dict = {}
    for (a, b), c in t.terms.items():
        for ka, ca in conv(Element.basis(PHISYM, a)).terms.items():
            for kb, cb in conv(Element.basis(PHISYM, b)).terms.items():
                acc[(ka, kb)] = acc.get((ka, kb), 0) + c * ca * cb
    return Tensor2(tag, acc)


def _phi_coproduct_element(x: Element) -> Tensor2:
    acc = Tensor2(PHISYM)
    for s, c in x.terms.items():
        acc = acc + c * phi_coproduct(s)
    return acc


def sprime_product(alpha: Word, beta: Word) -> Element:
    """Product in the S' basis, computed through phi (not assumed)."""
    return phi_to_sprime(multiply_phi(_sprime(tuple(alpha)), _sprime(tuple(beta))))


def sprime_coproduct(sigma: Word) -> Tensor2:
    return _convert_tensor(_phi_coproduct_element(_sprime(tuple(sigma))), phi_to_sprime, SPRIME)


def ssec_product(alpha: Word, beta: Word) -> Element:
    return phi_to_ssec(multiply_phi(_ssec(tuple(alpha)), _ssec(tuple(beta))))


def ssec_coproduct(sigma: Word) -> Tensor2:
    return _convert_tensor(_phi_coproduct_element(_ssec(tuple(sigma))), phi_to_ssec, SSEC)


# ----------------------------------------------------------- quotient by cycle type


def representative(lam) -> Word:
    """The permutation with consecutive cycles (1..l1)(l1+1..)... of type lam."""
    lam = sort_partition(lam)
    cycles, start = [], 1
    for part in lam:
        cycles.append(Cycle(tuple(range(start, start + part))))
        start += part
    return permutation_from_cycles(cycles, sum(lam))


def random_representative(lam, rng: random.Random) -> Word:
    n = sum(lam)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    cycles, i = [], 0
    for part in sort_partition(lam):
        cycles.append(Cycle(tuple(labels[i : i + part])))
        i += part
    return permutation_from_cycles(cycles, n)


def phi_to_y(x: Element) -> Element:
    """Project a phi-basis element onto the quotient by cycle type."""
    return Element(YBASIS, [(cycle_type(s), c) for s, c in x.terms.items()])


def y_product_from(alpha: Word, beta: Word) -> Element:
    return phi_to_y(phi_product(alpha, beta))


def y_product(lam, mu, *, trials: int = 0, seed: int = 0) -> Element:
    """Y_lam Y_mu via canonical representatives; ``trials`` extra random
    representative pairs are compared and any disagreement raises."""
    lam, mu = sort_partition(lam), sort_partition(mu)
    res = y_product_from(representative(lam), representative(mu))
    rng = random.Random(seed)
    for _ in range(trials):
        other = y_product_from(random_representative(lam, rng), random_representative(mu, rng))
        if other != res:
            raise InvariantViolation(f"Y product depends on representatives for {lam}, {mu}")
    return res


def y_coproduct(lam) -> Tensor2:
    t = phi_coproduct(representative(lam))
    return Tensor2(YBASIS, [((cycle_type(a), cycle_type(b)), c) for (a, b), c in t.terms.items()])


def y_scale(lam) -> Fraction:
    """prod m_i! / prod (lam_j - 1)!."""
    lam = sort_partition(lam)
    num = prod(factorial(m) for m in multiplicities(lam).values())
    den = prod(factorial(part - 1) for part in lam)
    return Fraction(num, den)


def y_to_m(x) -> Element:
    """Image of a Y-basis element (or a partition) in the monomial basis of Sym."""
    if not isinstance(x, Element):
        x = Element.basis(YBASIS, sort_partition(x))
    return Element(SYM_M, [(lam, c * y_scale(lam)) for lam, c in x.terms.items()])


def sprime_key_product(alpha: Word, beta: Word) -> Word:
    return shifted_concat(alpha, beta)


def cycle_type_counts(n: int) -> Counter:
    return Counter(cycle_type(s) for s in enumerate_family("permutations", n))


def phi_constants_table(max_total: int) -> dict:
    """{(alpha, beta): {sigma: coeff}} for all positive-degree pairs up to max_total."""
    table: dict = defaultdict(dict)
    for d1 in range(1, max_total):
        for d2 in range(1, max_total - d1 + 1):
            for a in enumerate_family("permutations", d1):
                for b in enumerate_family("permutations", d2):
                    table[(a, b)] = dict(phi_product(a, b).terms)
    return dict(table)
