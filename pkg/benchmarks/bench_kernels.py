"""Time the numba kernels against their numpy fallbacks.

Run with ``python benchmarks/bench_kernels.py [--repeat R]``.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from combhopf import accel
from combhopf.combinat.words import shuffle_permutations
from combhopf.oracle.biword import all_biwords


def cases():
    words6 = accel.all_words(6)
    xs, as_ = all_biwords(4, 5)
    f = np.array([2, 1, 4, 3, 6, 5, 8, 7], dtype=np.int64)
    taus = np.array(shuffle_permutations(4, 4) * 50, dtype=np.int64)
    return [
        ("connected_mask, 6^6 endofunctions", "connected_mask", (words6,)),
        ("parking_mask, 6^6 words", "parking_mask", (words6,)),
        ("inversion_counts, 6^6 words", "inversion_counts", (words6,)),
        ("biword_permutations, n=4 N=5", "biword_permutations", (xs, as_)),
        ("conjugate_by, 3500 shuffles", "conjugate_by", (f, taus)),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = {"numpy": accel.numpy_impl}
    if accel.numba_impl is not None:
        impls["numba"] = accel.numba_impl
    print(f"{'kernel':40s}" + "".join(f"{name:>12s}" for name in impls))
    for label, name, data in cases():
        row = f"{label:40s}"
        for impl in impls.values():
            fn = getattr(impl, name)
            fn(*data)  # compile / warm up
            best = min(timeit.repeat(lambda: fn(*data), number=1, repeat=args.repeat))
            row += f"{best * 1e3:10.2f}ms"
        print(row)


if __name__ == "__main__":
    main()
