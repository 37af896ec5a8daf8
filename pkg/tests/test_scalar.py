from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combhopf.errors import ScalarMixError
from combhopf.scalar import Q, QPoly, normalize, q_power, scalar_str, specialize

coeffs = st.lists(st.integers(-5, 5), max_size=5)


def test_qpoly_arithmetic():
    assert (1 + Q) * (1 + Q) == QPoly([1, 2, 1])
    assert Q ** 3 == QPoly.q(3)
    assert (1 + Q) - Q == 1
    assert QPoly([2, 4]) / 2 == QPoly([1, 2])


def test_normalize_and_specialize():
    assert normalize(Fraction(4, 2)) == 2 and isinstance(normalize(Fraction(4, 2)), int)
    assert isinstance(normalize(QPoly([7])), int)
    assert specialize(QPoly([1, 2, 1]), 1) == 4
    assert specialize(QPoly([0, 1]), 0) == 0
    assert q_power(3) == QPoly.q(3) and q_power(3, 2) == 8


def test_rational_and_q_do_not_mix():
    with pytest.raises(ScalarMixError):
        Q + Fraction(1, 2)
    with pytest.raises(ScalarMixError):
        QPoly([1, 1]) / 3


def test_scalar_str():
    assert scalar_str(QPoly([1, 1])) == "(1 + q)"
    assert scalar_str(QPoly.q(2)) == "q^2"
    assert scalar_str(Fraction(1, 2)) == "1/2"


@given(coeffs, coeffs, st.integers(-3, 3))
def test_evaluation_is_a_ring_morphism(a, b, x):
    p, r = QPoly(a), QPoly(b)
    assert (p * r)(x) == p(x) * r(x)
    assert (p + r)(x) == p(x) + r(x)


@given(coeffs)
def test_hash_matches_int_for_constants(a):
    p = QPoly(a)
    if p.is_constant():
        assert hash(p) == hash(p.constant()) and p == p.constant()
