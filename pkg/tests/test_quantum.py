from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import tens

from combhopf import algebras  # noqa: F401
from combhopf import quantum
from combhopf.element import Element, Tensor2
from combhopf.errors import CongruenceGradingError
from combhopf.hopf import get_algebra, tensor_multiply
from combhopf.oracle.qcommuting import oracle_product
from combhopf.scalar import Q, QPoly
from combhopf.series import catalan
from combhopf.sgqsym import quasi_shuffle

FQ, QS, NC = quantum.FQSYM_Q, quantum.QSYM_Q, quantum.NCSF_Q
perms = st.integers(0, 3).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def F(*words):
    return Element(FQ, {tuple(int(c) for c in s): 1 for s in words})


def test_fqsym_products():
    assert quantum.fqsym_product((1,), (1,)) == F("12", "21")
    assert quantum.fqsym_product((2, 1), (1,)) == F("213", "231", "321")
    assert quantum.fqsym_product((1,), (2, 1)) == F("132", "312", "321")


def test_delta_q_examples():
    assert quantum.delta_q((2, 1)) == tens(FQ, (1, "21", ""), ("q", "1", "1"), (1, "", "21"))
    assert quantum.delta_q((3, 2, 1)) == tens(FQ, (1, "321", ""), ("q^2", "21", "1"), ("q^2", "1", "21"),
                                              (1, "", "321"))
    assert quantum.delta_q((2, 1), 1) == tens(FQ, (1, "21", ""), (1, "1", "1"), (1, "", "21"))


def test_twisted_tensor_product():
    alg = get_algebra(FQ)
    x1, y1 = tens(FQ, (1, "1", "")), tens(FQ, (1, "", "1"))
    assert tensor_multiply(alg, x1, y1) == tens(FQ, (1, "1", "1"))
    assert tensor_multiply(alg, y1, x1) == tens(FQ, ("q", "1", "1"))
    assert tensor_multiply(alg, y1, x1, q=1) == tens(FQ, (1, "1", "1"))


@pytest.mark.parametrize("total", [2, 3, 4, 5])
def test_delta_q_is_a_twisted_morphism(total):
    alg = get_algebra(FQ)
    for d1 in range(1, total):
        for a, b in product(quantum.fqsym_basis(d1), quantum.fqsym_basis(total - d1)):
            lhs = Tensor2(FQ)
            for s, c in quantum.fqsym_product(a, b).terms.items():
                lhs = lhs + c * quantum.delta_q(s)
            assert lhs == tensor_multiply(alg, quantum.delta_q(a), quantum.delta_q(b))


def test_ncsf_coproduct():
    assert quantum.ncsfq_coproduct((2,)) == tens(NC, (1, "2", ""), ("q", "1", "1"), (1, "", "2"))
    assert quantum.ncsfq_coproduct((1,)) == tens(NC, (1, "1", ""), (1, "", "1"))
    assert quantum.ncsfq_product((2,), (1,)) == Element.basis(NC, (2, 1))


def test_ncsf_literal_pairing_fails_but_reversed_pairing_holds():
    literal = quantum.ncsf_pairing_defects(4, literal=True)
    assert ((2,), (1,), (1,)) in literal
    assert quantum.ncsfq_coproduct((2,)).coefficient((1,), (1,)) == Q
    assert quantum.qsymq_product((1,), (1,)).coefficient((2,)) == 1
    assert quantum.ncsf_pairing_defects(4) == []


def test_qsymq_products():
    assert quantum.qsymq_product((1,), (1,)) == Element(QS, {(2,): 1, (1, 1): 1 + Q})
    assert quantum.qsymq_product((1,), (1,), q=1) == Element(QS, {(2,): 1, (1, 1): 2})
    assert quantum.qsymq_coproduct((2, 1)) == Tensor2(QS, {((2, 1), ()): 1, ((2,), (1,)): 1, ((), (2, 1)): 1})


@pytest.mark.parametrize("total", [2, 3, 4])
def test_qsymq_matches_q_commuting_realization(total):
    from combhopf.combinat.partitions import compositions

    for d1 in range(1, total):
        for I in compositions(d1):
            for J in compositions(total - d1):
                got, leftover = oracle_product(I, J, 6)
                assert not leftover and got == quantum.qsymq_product(I, J)


@pytest.mark.parametrize("total", [2, 3, 4, 5])
def test_q_equal_one_is_the_quasi_shuffle(total):
    from combhopf.combinat.partitions import compositions

    for d1 in range(1, total):
        for I in compositions(d1):
            for J in compositions(total - d1):
                assert dict(quantum.qsymq_product(I, J, q=1).terms) == dict(quasi_shuffle(I, J))


def test_phi_map():
    assert quantum.phi_map_fundamental((1, 2, 3)) == Element.basis(quantum.QSYM_Q_F, (3,), 1)
    assert quantum.phi_map_fundamental((2, 1)) == Element.basis(quantum.QSYM_Q_F, (1, 1), Q)
    assert quantum.phi_map(quantum.fqsym_product((1,), (1,))) == quantum.qsymq_product((1,), (1,))


@pytest.mark.parametrize("total", [2, 3, 4])
def test_phi_map_is_multiplicative(total):
    for d1 in range(1, total):
        for a, b in product(quantum.fqsym_basis(d1), quantum.fqsym_basis(total - d1)):
            lhs = quantum.phi_map(quantum.fqsym_product(a, b))
            assert lhs == quantum.qsymq_multiply(quantum.phi_map(a), quantum.phi_map(b))


def test_sylvester_normal_forms():
    assert quantum.q_sylvester_normal_form((2, 1)) == ((2, 1), 0)
    assert quantum.q_sylvester_normal_form((3, 1, 2)) == ((1, 3, 2), 1)
    # a <= b < c fails for c = b = 2, so no rule applies to 212
    assert quantum.q_sylvester_normal_form((2, 1, 2)) == ((2, 1, 2), 0)


def test_class_counts():
    assert [quantum.permutation_class_count(n) for n in range(1, 6)] == [catalan(n) for n in range(1, 6)]
    assert [quantum.permutation_class_count(n, "hypoplactic") for n in range(1, 6)] == [1, 2, 4, 8, 16]


@settings(max_examples=60)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=6), st.sampled_from(["sylvester", "hypoplactic"]))
def test_exponent_is_the_inversion_drop(w, kind):
    from combhopf.combinat.words import inversions

    cls = quantum.congruence_class(w, kind)
    for u, e in cls.exponents.items():
        assert e == inversions(u) - inversions(cls.representative)


def test_grading_conflicts_are_reported(monkeypatch):
    def swap_both_ways(w):
        if len(w) == 2:
            yield (w[1], w[0])

    monkeypatch.setattr(quantum, "_sylvester_moves", swap_both_ways)
    with pytest.raises(CongruenceGradingError, match="not q-graded"):
        quantum.congruence_class((2, 1), "sylvester")


def test_delta_zero():
    assert quantum.delta_zero_coproduct((2, 1)) == Tensor2(quantum.FQSYM_ZERO, {((2, 1), ()): 1, ((), (2, 1)): 1})
    for n in range(1, 5):
        for s in quantum.fqsym_basis(n):
            t = quantum.delta_zero_coproduct(s)
            assert t == t.flip()
    assert quantum.p_basis_rank(4) == 24


def test_delta_zero_primitive_dimensions():
    # equals the free Lie algebra on connected permutations, consistent with U(L) = SGSym
    assert [quantum.primitive_dimension(n) for n in range(1, 6)] == [1, 1, 4, 17, 92]


@settings(max_examples=40)
@given(perms)
def test_delta_q_specializes_to_deconcatenation(s):
    assert quantum.specialize_tensor(quantum.delta_q(s), 1, quantum.FQSYM) == quantum.fqsym_coproduct(s)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=3), st.lists(st.integers(1, 3), max_size=3))
def test_ncsf_coproduct_is_twisted_multiplicative(I, J):
    alg = get_algebra(NC)
    lhs = quantum.ncsfq_coproduct(tuple(I) + tuple(J))
    assert lhs == tensor_multiply(alg, quantum.ncsfq_coproduct(I), quantum.ncsfq_coproduct(J))


def test_bar_shift():
    assert quantum.bar_shift(QPoly([1, 1]), 2) == QPoly([0, 1, 1])
    assert quantum.bar_shift(1, 1) == Q
    with pytest.raises(ValueError):
        quantum.bar_shift(QPoly.q(3), 1)
