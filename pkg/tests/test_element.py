import pytest
from hypothesis import given
from hypothesis import strategies as st

from combhopf import eqsym
from combhopf.element import Element, Tensor2, tensor
from combhopf.errors import AlgebraMismatchError

E = eqsym.EQSYM
keys = st.sampled_from([(), (1,), (1, 1), (2, 1), (1, 2), (2, 2)])
elements = st.lists(st.tuples(keys, st.integers(-3, 3)), max_size=5).map(lambda ts: Element(E, ts))


def test_zero_coefficients_are_dropped():
    x = Element(E, [((1,), 2), ((1,), -2), ((2, 1), 1)])
    assert x.keys() == [(2, 1)] and len(x) == 1
    assert Element.zero(E) == 0 and not Element.zero(E)


def test_mixing_algebras_is_an_error():
    with pytest.raises(AlgebraMismatchError):
        Element.basis(E, (1,)) + Element.basis(eqsym.ESYM, (1,))


def test_items_are_graded_then_lexicographic():
    x = Element(E, {(2, 1): 1, (1,): 1, (1, 2): 1, (): 3})
    assert x.keys() == [(), (1,), (1, 2), (2, 1)]
    assert x.degrees() == {0, 1, 2} and not x.is_homogeneous()


def test_tensor_and_flip():
    t = tensor(Element(E, {(1,): 2}), Element(E, {(1, 1): 1, (): 1}))
    assert t.coefficient((1,), (1, 1)) == 2 and t.coefficient((1,), ()) == 2
    assert t.flip().coefficient((1, 1), (1,)) == 2
    assert Tensor2(E, [(((1,), ()), 1), (((1,), ()), -1)]) == Tensor2(E)


@given(elements, elements, elements)
def test_vector_space_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x - x == Element.zero(E)
    assert 2 * x == x + x


@given(elements)
def test_hash_agrees_with_equality(x):
    y = Element(E, list(x.terms.items())[::-1])
    assert x == y and hash(x) == hash(y)
