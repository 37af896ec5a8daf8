"""Hot enumeration kernels.

Every kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
version.  The public names dispatch to numba unless it is unavailable or the
environment variable ``COMBHOPF_DISABLE_NUMBA`` is set to a non-empty value
other than ``0``.  Both implementations are importable directly
(``accel.numpy_impl`` / ``accel.numba_impl``) so tests and the benchmark can
compare them.

Conventions: words are rows of an ``int64`` array with letters starting at 1.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

_flag = os.environ.get("COMBHOPF_DISABLE_NUMBA", "")
NUMBA_REQUESTED = _flag in ("", "0")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = NUMBA_REQUESTED and HAVE_NUMBA


# ---------------------------------------------------------------- numpy path


def _np_conjugate_by(word, taus):
    """Rows h = tau^-1 o word o tau for every row tau of ``taus``."""
    taus = np.asarray(taus, dtype=np.int64)
    w = np.asarray(word, dtype=np.int64)
    k, n = taus.shape
    inv = np.empty_like(taus)
    rows = np.arange(k)[:, None]
    inv[rows, taus - 1] = np.arange(1, n + 1)[None, :]
    images = w[taus - 1]
    return inv[rows, images - 1]


def _np_connected_mask(words):
    """True where the endofunction row is not a nontrivial shifted concatenation."""
    words = np.asarray(words, dtype=np.int64)
    k, n = words.shape
    if n <= 1:
        return np.ones(k, dtype=np.bool_)
    prefix_max = np.maximum.accumulate(words, axis=1)[:, :-1]
    suffix_min = np.minimum.accumulate(words[:, ::-1], axis=1)[:, ::-1][:, 1:]
    cut = np.arange(1, n)[None, :]
    splits = (prefix_max <= cut) & (suffix_min > cut)
    return ~splits.any(axis=1)


def _np_parking_mask(words):
    words = np.asarray(words, dtype=np.int64)
    if words.shape[1] == 0:
        return np.ones(words.shape[0], dtype=np.bool_)
    s = np.sort(words, axis=1)
    return (s <= np.arange(1, words.shape[1] + 1)[None, :]).all(axis=1)


def _np_biword_permutations(xs, as_):
    """Permutation indexing the unique phi-term containing each biword row.

    Positions sharing an x-letter form one cycle; inside a block, positions are
    visited in increasing (a-letter, position) order and each maps to the next
    one, cyclically.
    """
    xs = np.asarray(xs, dtype=np.int64)
    as_ = np.asarray(as_, dtype=np.int64)
    k, n = xs.shape
    if n == 0:
        return np.zeros((k, 0), dtype=np.int64)
    base = int(max(xs.max(initial=0), as_.max(initial=0), n)) + 1
    pos = np.arange(n, dtype=np.int64)[None, :]
    keys = (xs * base + as_) * base + pos
    order = np.argsort(keys, axis=1, kind="stable")
    xs_sorted = np.take_along_axis(xs, order, axis=1)
    new_block = np.ones((k, n), dtype=np.bool_)
    new_block[:, 1:] = xs_sorted[:, 1:] != xs_sorted[:, :-1]
    idx = np.broadcast_to(np.arange(n), (k, n))
    block_start = np.maximum.accumulate(np.where(new_block, idx, 0), axis=1)
    last_in_block = np.ones((k, n), dtype=np.bool_)
    last_in_block[:, :-1] = new_block[:, 1:]
    nxt = np.where(last_in_block, block_start, np.minimum(idx + 1, n - 1))
    succ_pos = np.take_along_axis(order, nxt, axis=1)
    rows = np.arange(k)[:, None]
    out = np.empty((k, n), dtype=np.int64)
    out[rows, order] = succ_pos + 1
    return out


def _np_inversion_counts(words):
    words = np.asarray(words, dtype=np.int64)
    n = words.shape[1]
    total = np.zeros(words.shape[0], dtype=np.int64)
    for i in range(n):
        total += (words[:, i : i + 1] > words[:, i + 1 :]).sum(axis=1)
    return total


numpy_impl = SimpleNamespace(
    conjugate_by=_np_conjugate_by,
    connected_mask=_np_connected_mask,
    parking_mask=_np_parking_mask,
    biword_permutations=_np_biword_permutations,
    inversion_counts=_np_inversion_counts,
)


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _nb_conjugate_by(word, taus):
        k, n = taus.shape
        out = np.empty((k, n), dtype=np.int64)
        inv = np.empty(n, dtype=np.int64)
        for r in range(k):
            for i in range(n):
                inv[taus[r, i] - 1] = i + 1
            for i in range(n):
                out[r, i] = inv[word[taus[r, i] - 1] - 1]
        return out

    @numba.njit(cache=True)
    def _nb_connected_mask(words):
        k, n = words.shape
        out = np.ones(k, dtype=np.bool_)
        suffix = np.empty(n + 1, dtype=np.int64)
        for r in range(k):
            suffix[n] = n + 1
            for i in range(n - 1, -1, -1):
                v = words[r, i]
                suffix[i] = v if v < suffix[i + 1] else suffix[i + 1]
            pm = 0
            for c in range(1, n):
                if words[r, c - 1] > pm:
                    pm = words[r, c - 1]
                if pm <= c and suffix[c] > c:
                    out[r] = False
                    break
        return out

    @numba.njit(cache=True)
    def _nb_parking_mask(words):
        k, n = words.shape
        out = np.ones(k, dtype=np.bool_)
        counts = np.zeros(n + 2, dtype=np.int64)
        for r in range(k):
            counts[:] = 0
            for i in range(n):
                v = words[r, i]
                if v < 1 or v > n:
                    out[r] = False
                    break
                counts[v] += 1
            if not out[r]:
                continue
            acc = 0
            for j in range(1, n + 1):
                acc += counts[j]
                if acc < j:
                    out[r] = False
                    break
        return out

    @numba.njit(cache=True)
    def _nb_biword_permutations(xs, as_):
        k, n = xs.shape
        out = np.empty((k, n), dtype=np.int64)
        order = np.empty(n, dtype=np.int64)
        for r in range(k):
            for i in range(n):
                order[i] = i
            # insertion sort on (x, a, position)
            for i in range(1, n):
                j = i
                while j > 0:
                    p, q = order[j - 1], order[j]
                    if xs[r, p] > xs[r, q] or (xs[r, p] == xs[r, q] and as_[r, p] > as_[r, q]) or (
                        xs[r, p] == xs[r, q] and as_[r, p] == as_[r, q] and p > q
                    ):
                        order[j - 1], order[j] = q, p
                        j -= 1
                    else:
                        break
            start = 0
            for t in range(n):
                last = t == n - 1 or xs[r, order[t + 1]] != xs[r, order[t]]
                if last:
                    out[r, order[t]] = order[start] + 1
                    start = t + 1
                else:
                    out[r, order[t]] = order[t + 1] + 1
        return out

    @numba.njit(cache=True)
    def _nb_inversion_counts(words):
        k, n = words.shape
        out = np.zeros(k, dtype=np.int64)
        for r in range(k):
            c = 0
            for i in range(n):
                for j in range(i + 1, n):
                    if words[r, i] > words[r, j]:
                        c += 1
            out[r] = c
        return out

    def _as2d(a):
        return np.ascontiguousarray(np.asarray(a, dtype=np.int64))

    numba_impl = SimpleNamespace(
        conjugate_by=lambda w, t: _nb_conjugate_by(_as2d(w), _as2d(t)),
        connected_mask=lambda w: _nb_connected_mask(_as2d(w)),
        parking_mask=lambda w: _nb_parking_mask(_as2d(w)),
        biword_permutations=lambda x, a: _nb_biword_permutations(_as2d(x), _as2d(a)),
        inversion_counts=lambda w: _nb_inversion_counts(_as2d(w)),
    )
else:  # pragma: no cover
    numba_impl = None

_impl = numba_impl if USE_NUMBA else numpy_impl

conjugate_by = _impl.conjugate_by
connected_mask = _impl.connected_mask
parking_mask = _impl.parking_mask
biword_permutations = _impl.biword_permutations
inversion_counts = _impl.inversion_counts


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def all_words(n: int, alphabet: int | None = None) -> np.ndarray:
    """Every word of length n over 1..alphabet (default n), lexicographic order."""
    if alphabet is None:
        alphabet = n
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((alphabet,) * n, dtype=np.int64).reshape(n, -1).T
    return grids + 1
