"""Words, endofunctions and permutations encoded as tuples of positive integers."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from ..errors import ParseError

Word = tuple[int, ...]


def parse_word(text: str, *, compact: bool = True) -> Word:
    """Parse ``"4,2,3"`` or, when ``compact`` and unambiguous, ``"423"``."""
    text = text.strip()
    if not text:
        return ()
    try:
        if "," in text:
            return tuple(int(t) for t in text.split(","))
        if compact and text.isdigit():
            return tuple(int(ch) for ch in text)
        return (int(text),)
    except ValueError as exc:
        raise ParseError(f"bad word {text!r}") from exc


def format_word(w: Sequence[int]) -> str:
    return ",".join(str(a) for a in w)


def is_endofunction(w: Sequence[int]) -> bool:
    n = len(w)
    return all(1 <= a <= n for a in w)


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def inverse(p: Sequence[int]) -> Word:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def compose(p: Sequence[int], r: Sequence[int]) -> Word:
    """(p o r)(i) = p(r(i))."""
    return tuple(p[v - 1] for v in r)


def standardize(w: Sequence[int]) -> Word:
    """Rank positions by (letter, position)."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def shift(w: Sequence[int], k: int) -> Word:
    return tuple(a + k for a in w)


def shifted_concat(f: Sequence[int], g: Sequence[int]) -> Word:
    n = len(f)
    return tuple(f) + tuple(a + n for a in g)


def shuffle_positions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Position sets (0-based) occupied by the first factor in each shuffle."""
    return combinations(range(n + m), n)


def shuffle(u: Sequence[int], v: Sequence[int]) -> list[Word]:
    """All interleavings, with multiplicity (binom(|u|+|v|, |u|) words)."""
    n, m = len(u), len(v)
    out = []
    for pos in shuffle_positions(n, m):
        w = [0] * (n + m)
        chosen = set(pos)
        it_u, it_v = iter(u), iter(v)
        for i in range(n + m):
            w[i] = next(it_u) if i in chosen else next(it_v)
        out.append(tuple(w))
    return out


def shuffle_permutations(n: int, m: int) -> list[Word]:
    """The words of (1..n) shuffled with (n+1..n+m), read as permutations."""
    return shuffle(identity(n), shift(identity(m), n))


def shifted_shuffle(a: Sequence[int], b: Sequence[int]) -> list[Word]:
    return shuffle(a, shift(b, len(a)))


def split_points(f: Sequence[int]) -> list[int]:
    """Cuts 0 < k < n such that f = f[:k] . (f[k:] - k) as a shifted concatenation."""
    n = len(f)
    cuts = []
    pm = 0
    suffix = [n + 1] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = min(f[i], suffix[i + 1])
    for k in range(1, n):
        pm = max(pm, f[k - 1])
        if pm <= k and suffix[k] > k:
            cuts.append(k)
    return cuts


def is_connected(f: Sequence[int]) -> bool:
    return len(f) > 0 and not split_points(f)


def connected_factorization(f: Sequence[int]) -> list[Word]:
    """Unique maximal factorization into connected endofunctions."""
    cuts = [0] + split_points(f) + [len(f)]
    return [tuple(a - lo for a in f[lo:hi]) for lo, hi in zip(cuts, cuts[1:])]


def deconcatenations(f: Sequence[int]) -> list[tuple[Word, Word]]:
    """All (g, h) with g . h = f, trivial splittings included."""
    n = len(f)
    cuts = [0] + split_points(f) + ([n] if n else [])
    if n == 0:
        cuts = [0]
    return [(tuple(f[:k]), tuple(a - k for a in f[k:])) for k in cuts]


def inversions(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


coxeter_length = inversions


def cross_inversions(w: Sequence[int], k: int) -> int:
    """Pairs (i <= k < j) with w(i) > w(j)."""
    return sum(1 for i in range(k) for j in range(k, len(w)) if w[i] > w[j])


def descent_composition(w: Sequence[int]) -> tuple[int, ...]:
    n = len(w)
    if n == 0:
        return ()
    parts, run = [], 1
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def restrict(f: Sequence[int], positions: Sequence[int]) -> Word:
    """Standardized restriction of f to a set of 0-based positions closed under f."""
    rank = {p + 1: i for i, p in enumerate(positions, 1)}
    return tuple(rank[f[p]] for p in positions)


def closed_subsets(f: Sequence[int], size: int) -> Iterator[tuple[int, ...]]:
    """0-based position sets A of the given size with f(A) in A and f(A^c) in A^c."""
    n = len(f)
    for A in combinations(range(n), size):
        inside = set(p + 1 for p in A)
        if all((f[i] in inside) == ((i + 1) in inside) for i in range(n)):
            yield A
