"""Benchmark the word-space scan kernels: numba @njit vs pure numpy.

Times the three per-word statistics kernels over complete word spaces at
codebook-sweep scale. Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from dupcodes import wordspace
from dupcodes.wordspace import (
    all_words,
    pal2_free_mask_numpy,
    run_stats_numpy,
    signature_scan_numpy,
)


def _time(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    if wordspace.signature_scan_numba is None:
        print("numba backend unavailable (DUPCODES_BACKEND=numpy?); nothing to compare")
        return
    cases = [(2, 16), (2, 20), (3, 10), (4, 8)]
    print(f"active backend: {wordspace.backend()}")
    print(f"{'space':>10} {'kernel':>16} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for q, n in cases:
        arr = all_words(n, q)
        kernels = [
            ("signature_scan", lambda a: wordspace.signature_scan_numba(a, 2), lambda a: signature_scan_numpy(a, 2)),
            ("run_stats", wordspace.run_stats_numba, run_stats_numpy),
            ("pal2_free_mask", wordspace.pal2_free_mask_numba, pal2_free_mask_numpy),
        ]
        for name, nb_fn, np_fn in kernels:
            nb_fn(arr[:64])  # JIT warm-up outside the timed region
            t_nb = _time(nb_fn, arr)
            t_np = _time(np_fn, arr)
            label = f"q={q} n={n}"
            print(f"{label:>10} {name:>16} {t_nb * 1e3:>8.2f}ms {t_np * 1e3:>8.2f}ms {t_np / t_nb:>7.1f}x")
        # both paths must agree bit for bit
        for a, b in zip(wordspace.signature_scan_numba(arr, 2), signature_scan_numpy(arr, 2)):
            assert (np.asarray(a) == np.asarray(b)).all()


if __name__ == "__main__":
    main()
