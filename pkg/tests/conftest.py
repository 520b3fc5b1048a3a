"""Shared helpers: independent brute-force oracles used across the suite.

Everything here recomputes quantities from first principles (itertools
enumeration over raw tuples), deliberately bypassing the library's own
formulas and kernels so that formula tests stay two-route.
"""

from itertools import product

from dupcodes.words import Word


def words_of(n: int, q: int):
    """All words of length n over Z_q, lexicographic."""
    for symbols in product(range(q), repeat=n):
        yield Word(symbols, q)


def max_zero_run(symbols) -> int:
    longest = current = 0
    for s in symbols:
        current = current + 1 if s == 0 else 0
        longest = max(longest, current)
    return longest


def rll_weight_oracle(n: int, ell_max: int, weight: int, q: int) -> int:
    """Count words of length n, zero-runs <= ell_max, Hamming weight = weight."""
    count = 0
    for symbols in product(range(q), repeat=n):
        if sum(1 for s in symbols if s != 0) != weight:
            continue
        if max_zero_run(symbols) <= ell_max:
            count += 1
    return count

