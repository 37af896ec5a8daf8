"""Exhaustive, duplicate-free enumeration of the combinatorial families."""

from __future__ import annotations

from itertools import permutations as _perms
from typing import Iterator

import numpy as np

from .. import accel
from ..errors import BudgetExceededError
from .words import Word

BUDGETS = {
    "endofunctions": 7,
    "connected_endofunctions": 7,
    "permutations": 8,
    "connected_permutations": 8,
    "involutions": 10,
    "parking_functions": 7,
    "nondecreasing_parking_functions": 12,
}

KINDS = tuple(BUDGETS)


def _check(kind: str, n: int, budget: int | None) -> None:
    if kind not in BUDGETS:
        raise ValueError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
    limit = BUDGETS[kind] if budget is None else budget
    if n > limit:
        raise BudgetExceededError(f"{kind} of size {n} exceeds the enumeration budget n <= {limit}")


def word_array(kind: str, n: int, budget: int | None = None) -> np.ndarray:
    """The family as an (count, n) int64 array, rows in lexicographic order."""
    _check(kind, n, budget)
    if kind in ("endofunctions", "connected_endofunctions", "parking_functions"):
        words = accel.all_words(n)
        if kind == "connected_endofunctions":
            words = words[accel.connected_mask(words)] if n else words[:0]
        elif kind == "parking_functions":
            words = words[accel.parking_mask(words)]
        return words
    if kind in ("permutations", "connected_permutations", "involutions"):
        perms = list(_perms(range(1, n + 1)))
        words = np.array(perms, dtype=np.int64).reshape(len(perms), n)
        if kind == "connected_permutations":
            words = words[accel.connected_mask(words)] if n else words[:0]
        elif kind == "involutions":
            idx = words - 1
            words = words[(np.take_along_axis(words, idx, axis=1) == np.arange(1, n + 1)).all(axis=1)]
        return words
    # nondecreasing parking functions: a_i <= i, weakly increasing
    out: list[Word] = []

    def rec(prefix: list[int]):
        i = len(prefix) + 1
        if i > n:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 1
        for a in range(lo, i + 1):
            prefix.append(a)
            rec(prefix)
            prefix.pop()

    rec([])
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def enumerate_family(kind: str, n: int, budget: int | None = None) -> Iterator[Word]:
    for row in word_array(kind, n, budget):
        yield tuple(int(a) for a in row)


def count(kind: str, n: int, budget: int | None = None) -> int:
    return int(word_array(kind, n, budget).shape[0])
