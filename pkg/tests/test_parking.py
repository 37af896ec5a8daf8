import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combhopf import algebras  # noqa: F401
from combhopf import parking
from combhopf.combinat.graphs import graph_code, is_nondecreasing, is_parking
from combhopf.element import Element, Tensor2

CP, CC = parking.CPQSYM, parking.CCQSYM


def w(s):
    return tuple(int(c) for c in s)


def M(tag, *words):
    return Element(tag, {w(s): 1 for s in words})


def test_cpq_examples():
    assert parking.cpq_product((1,), (1, 1)) == M(CP, "122", "121", "113")
    assert parking.cpq_product((1,), w("221")) == M(CP, "1332", "3231", "2231", "2214")
    assert parking.cpq_coproduct(w("525124")) == Tensor2(CP, {(w("525124"), ()): 1, ((), w("525124")): 1})
    assert parking.cpq_coproduct(w("4131166")) == Tensor2(
        CP, {(w("4131166"), ()): 1, (w("41311"), w("11")): 1, ((), w("4131166")): 1})


@pytest.mark.parametrize("total", [2, 3, 4, 5])
def test_products_of_parking_functions_stay_parking(total):
    for d1 in range(1, total):
        for p in parking.cpq_basis(d1):
            for r in parking.cpq_basis(total - d1):
                assert all(is_parking(h) for h in parking.cpq_product(p, r).terms)


def test_nondecreasing_quotient():
    assert parking.ccq_product((1,), (1, 1)) == M(CC, "122", "113")
    assert [len(parking.ccq_basis(n)) for n in range(1, 5)] == [1, 2, 5, 14]
    rep = parking.ideal_coideal_check(4)
    assert rep.passed and rep.checked > 100


def test_unlabelled_graphs():
    assert parking.unlabelled_dimensions(5) == [1, 1, 3, 7, 19, 47]
    assert [len(parking.all_graph_codes(n)) for n in range(6)] == [1, 1, 3, 7, 19, 47]
    loop = graph_code((1,))
    assert parking.unlabelled_product(loop, loop) == Element.basis(parking.UPG, graph_code((1, 2)))


def test_unlabelled_coproduct_unshuffles_components():
    g = graph_code((1, 2, 2))  # a loop and a loop with a leaf
    t = parking.unlabelled_coproduct(g)
    assert len(t) == 4 and t.coefficient(graph_code((1,)), graph_code((1, 1))) == 1
    two_loops = graph_code((1, 2))
    assert parking.unlabelled_coproduct(two_loops).coefficient(graph_code((1,)), graph_code((1,))) == 2


def test_sums_over_all_labellings_form_a_subbialgebra():
    rep = parking.upg_morphism_check(4)
    assert rep.passed, rep.failures[:3]


def test_sums_over_parking_labellings_do_not_close():
    assert parking.parking_realization_closure(3).passed
    rep = parking.parking_realization_closure(4)
    loop_leaf = graph_code((1, 1))
    assert not rep.passed
    assert [(g1, g2) for g1, g2, _ in rep.failures] == [(loop_leaf, loop_leaf)]


def test_forests():
    assert [len(parking.forest_basis(n)) for n in range(1, 6)] == [1, 2, 4, 9, 20]
    root = parking.forest_basis(1)[0]
    two_roots = parking.forest_basis(2)
    assert parking.forest_basis_product(root, root) == Element(parking.FOREST, {root + root: 2})
    assert root + root in two_roots
    rep = parking.forest_closure(4)
    assert rep.passed, rep.failures[:3]


def test_forest_roots_are_loops():
    from combhopf.combinat.graphs import forest_code

    for n in range(1, 6):
        for p in parking.ccq_basis(n):
            code = forest_code(p)
            assert len(code) == sum(1 for i, v in enumerate(p, 1) if v == i)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.sampled_from(parking.cpq_basis(n))),
       st.integers(1, 2).flatmap(lambda n: st.sampled_from(parking.cpq_basis(n))))
def test_projection_is_multiplicative(p, r):
    lhs = parking.ccq_project(parking.cpq_product(p, r))
    if is_nondecreasing(p) and is_nondecreasing(r):
        assert lhs == parking.ccq_product(p, r)
    else:
        assert lhs == Element.zero(CC)
