"""Generating-series utilities (exact integer arithmetic)."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from sympy import divisors, mobius, totient


def inverse_one_minus(g: Sequence[int], n_max: int) -> list[int]:
    """Coefficients a_0..a_{n_max} of 1 / (1 - sum_{n>=1} g_n t^n); g[0] is g_1."""
    a = [1] + [0] * n_max
    for m in range(1, n_max + 1):
        a[m] = sum(g[k - 1] * a[m - k] for k in range(1, min(m, len(g)) + 1))
    return a


def lie_dims_from_generators(generator_counts: Sequence[int], n_max: int | None = None) -> list[int]:
    """Graded dimensions l_1..l_{n_max} with prod (1 - t^n)^(-l_n) = 1 / (1 - sum g_n t^n).

    For a free associative algebra on g_n generators of degree n these are the
    dimensions of the free Lie algebra on the same generators.
    """
    g = [int(x) for x in generator_counts]
    if n_max is None:
        n_max = len(g)
    g = g + [0] * max(0, n_max - len(g))
    a = inverse_one_minus(g, n_max)
    # b_m = m [t^m] log A(t) = sum_{d | m} d l_d
    b = [0] * (n_max + 1)
    for m in range(1, n_max + 1):
        b[m] = m * a[m] - sum(b[i] * a[m - i] for i in range(1, m))
    out = []
    for n in range(1, n_max + 1):
        s = sum(int(mobius(n // d)) * b[d] for d in divisors(n))
        if s % n:
            raise ArithmeticError(f"non-integral Lie dimension at degree {n}")
        out.append(s // n)
    return out


def generators_from_dims(dims: Sequence[int]) -> list[int]:
    """Inverse of ``inverse_one_minus``: g_n from graded dimensions d_0=1, d_1, ..."""
    d = list(dims)
    g = []
    for m in range(1, len(d)):
        g.append(d[m] - sum(g[k - 1] * d[m - k] for k in range(1, m)))
    return g


def compose_products(generator_counts: Sequence[int], n: int) -> int:
    """Sum over compositions of n of the products of generator counts."""
    return inverse_one_minus(list(generator_counts), n)[n]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def euler_phi(n: int) -> int:
    return int(totient(n))


def cyclic_character_coefficients(n: int) -> dict[tuple[int, ...], Fraction]:
    """(1/n) sum_{d | n} phi(d) p_d^{n/d}, keyed by the power-sum partition (d,)*(n/d)."""
    if n < 1:
        raise ValueError("n must be positive")
    return {(d,) * (n // d): Fraction(euler_phi(d), n) for d in sorted(divisors(n), reverse=True)}
