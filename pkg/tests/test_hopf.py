import pytest

from combhopf import algebras  # noqa: F401
from combhopf import eqsym, sgqsym
from combhopf.element import Element
from combhopf.errors import AugmentationError, UnknownAlgebraError
from combhopf.hopf import check_hopf_axioms, convolution_log_project, get_algebra, is_primitive, registered


def _pi1(key, tag=sgqsym.SGSYM):
    alg = get_algebra(tag)
    return convolution_log_project(Element.basis(tag, key), alg.coproduct, alg.product, alg.degree)


def test_eulerian_idempotent_examples():
    assert _pi1((1,)) == Element.basis(sgqsym.SGSYM, (1,))
    assert _pi1((1, 2)) == 0
    assert _pi1((2, 1)) == Element.basis(sgqsym.SGSYM, (2, 1))


def test_eulerian_idempotent_rejects_degree_zero():
    with pytest.raises(AugmentationError, match="augmentation"):
        _pi1(())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_eulerian_idempotent_lands_in_primitives(n):
    alg = get_algebra(eqsym.ESYM)
    for f in eqsym.basis(n):
        assert is_primitive(alg, _pi1(f, eqsym.ESYM))


def test_eulerian_idempotent_leading_term_on_connected():
    for f in eqsym.connected_generators(3):
        x = _pi1(f, eqsym.ESYM)
        assert x.coefficient(f) == 1
        assert all(k == f or not eqsym_connected(k) for k in x.terms)


def eqsym_connected(k):
    from combhopf.combinat.words import is_connected

    return is_connected(k)


@pytest.mark.parametrize("tag", ["EQSym", "ESym", "SGQSym", "SGSym", "PhiSym", "CPQSym", "CCQSym",
                                 "FQSym", "FQSym_q", "FQSym-0", "QSym_q", "NCSF_q", "UPG", "Forest",
                                 "PiQSym", "QSym-emb", "Sym-emb", "PhiSym-Y", "Sym-m", "Sym-p",
                                 "SGQSym-inv"])
def test_registered_algebras_are_bialgebras(tag):
    rep = check_hopf_axioms(tag, 3)
    assert rep.passed, rep.lines()


def test_phisym_is_cocommutative():
    rep = check_hopf_axioms("PhiSym", 3)
    assert rep.checks["cocommutativity"]


def test_unregistered_algebra():
    with pytest.raises(UnknownAlgebraError):
        check_hopf_axioms("NoSuchAlgebra", 2)
    assert "EQSym" in registered()


def test_harness_reports_a_broken_structure():
    from combhopf.hopf import Algebra, register

    def bad_product(a, b):
        return Element.basis("Broken", tuple(a) + tuple(b), 2 if a and b else 1)

    def cop(a):
        from combhopf.element import Tensor2

        return Tensor2("Broken", [((tuple(a[:k]), tuple(a[k:])), 1) for k in range(len(a) + 1)])

    register(Algebra("Broken", "B", lambda n: [(1,) * n], len, bad_product, cop))
    rep = check_hopf_axioms("Broken", 3)
    assert not rep.passed and not rep.checks["compatibility"]
    assert "compatibility" in rep.counterexamples
