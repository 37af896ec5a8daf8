from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combhopf import algebras  # noqa: F401
from combhopf import sgqsym
from combhopf.combinat.cycles import Cycle
from combhopf.combinat.words import is_permutation
from combhopf.element import Element
from combhopf.errors import NotInSpanError
from combhopf.series import lie_dims_from_generators
from combhopf.combinat.enumerate import count

SG = sgqsym.SGQSYM
perms = st.integers(0, 3).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_product_examples():
    assert sgqsym.sg_product((1,), (2, 1)) == Element(SG, {(1, 3, 2): 1, (2, 1, 3): 1, (3, 2, 1): 1})
    want = {(1, 2, 5, 4, 3): 1, (1, 4, 3, 2, 5): 1, (1, 5, 3, 4, 2): 2, (3, 2, 1, 4, 5): 1, (4, 2, 3, 1, 5): 2,
            (5, 2, 3, 4, 1): 3}
    assert sgqsym.sg_product((1, 2), (3, 2, 1)) == Element(SG, want)
    for n in range(1, 4):
        for p in range(1, 4):
            ident = tuple(range(1, n + p + 1))
            assert sgqsym.sg_product(ident[:n], ident[:p]) == Element(SG, {ident: comb(n + p, n)})


def test_cycle_placements_of_12_321():
    placements = sgqsym.cycle_placements((1, 2), (3, 2, 1))
    assert len(placements) == 10
    assert (Cycle((1,)), Cycle((2,)), Cycle((3, 5)), Cycle((4,))) in placements


def test_dual_splitting_counts():
    assert sgqsym.dual_splitting_count((5, 2, 3, 4, 1), (1, 2), (3, 2, 1)) == 3
    assert sgqsym.dual_splitting_count((1, 5, 3, 4, 2), (1, 2), (3, 2, 1)) == 2
    assert sgqsym.dual_splitting_count((2, 3, 1), (2, 3, 1), ()) == 1
    assert sgqsym.sg_product((), (2, 1)) == Element.basis(SG, (2, 1))
    assert sgqsym.sg_product((1,), (1,)) == Element(SG, {(1, 2): 2})


@pytest.mark.parametrize("total", [2, 3, 4, 5])
def test_three_descriptions_of_the_product_agree(total):
    for d1 in range(1, total):
        for a in sgqsym.basis(d1):
            for b in sgqsym.basis(total - d1):
                x = sgqsym.sg_product(a, b)
                assert x == sgqsym.sg_product_cycle_splitting(a, b)
                assert all(is_permutation(h) for h in x.terms)
                for h, c in x.terms.items():
                    assert sgqsym.dual_splitting_count(h, a, b) == c


def test_free_generators_are_connected_permutations():
    gens = [count("connected_permutations", n) for n in range(1, 6)]
    assert gens == [1, 1, 3, 13, 71]
    dims = [1] + [count("permutations", n) for n in range(1, 6)]
    from combhopf.series import inverse_one_minus

    assert inverse_one_minus(gens, 5) == dims
    assert lie_dims_from_generators(gens) == [1, 1, 4, 17, 92]


def test_cycle_type_embedding_products():
    assert sgqsym.ul_product((1,), (1,)) == Element(sgqsym.SYM_EMB, {(1, 1): 2})
    assert sgqsym.ul_product((1,), (2,)) == Element(sgqsym.SYM_EMB, {(2, 1): 1})
    assert sgqsym.ul_product((2,), (2,)) == Element(sgqsym.SYM_EMB, {(2, 2): 2})


@pytest.mark.parametrize("total", [2, 3, 4, 5, 6])
def test_ul_identity(total):
    from combhopf.combinat.partitions import partitions

    for d1 in range(1, total):
        for lam in partitions(d1):
            for mu in partitions(total - d1):
                assert sgqsym.ul_identity_holds(lam, mu), (lam, mu)


def test_ul_identity_coefficient_can_be_fractional():
    assert sgqsym.ul_product_predicted((1,), (1,)).coefficient((1, 1)) == 2
    assert sgqsym.ul_product_predicted((2,), (1,)).coefficient((2, 1)) == Fraction(1)


def test_coarse_spans_close():
    for kind, keys in (("u_pi", [((1,),), ((1, 2),), ((1,), (2,))]), ("uq", [(1,), (2,), (1, 1)]),
                       ("ul", [(1,), (2,), (1, 1)])):
        for a in keys:
            for b in keys:
                sgqsym.coarse_product(kind, a, b)


def test_regroup_rejects_elements_outside_the_span():
    with pytest.raises(NotInSpanError):
        sgqsym.regroup(Element(SG, {(2, 1, 3): 1}), "ul")


def test_uq_constants_are_shuffle_not_quasi_shuffle():
    diffs = sgqsym.uq_versus_quasi_shuffle(3)
    first = diffs[0]
    assert first[:3] == ((1,), (1,), {(1, 1): 2})
    assert first[3] == {(1, 1): 2, (2,): 1}
    # the discrepancy is exactly the merged (contracted) terms of the quasi-shuffle
    for I, J, got, qs in diffs:
        assert all(len(k) == len(I) + len(J) for k in got)
        assert {k: c for k, c in qs.items() if len(k) == len(I) + len(J)} == got


def test_involutions_span_a_subalgebra():
    rep = sgqsym.involutive_span_check(4)
    assert rep.passed and [rep.dimensions[d] for d in range(1, 5)] == [1, 2, 4, 10]
    assert sgqsym.sg_product((2, 1), (2, 1)).terms.keys() <= {k for k in sgqsym.basis(4) if sgqsym.is_involution(k)}


def test_cyclic_character():
    assert sgqsym.cyclic_character(1) == Element("Sym-p", {(1,): 1})
    assert sgqsym.cyclic_character(2) == Element("Sym-p", {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert sgqsym.cyclic_character(4) == Element(
        "Sym-p", {(1, 1, 1, 1): Fraction(1, 4), (2, 2): Fraction(1, 4), (4,): Fraction(1, 2)})


@settings(max_examples=50)
@given(perms, perms)
def test_product_is_commutative(a, b):
    assert sgqsym.sg_product(a, b) == sgqsym.sg_product(b, a)
