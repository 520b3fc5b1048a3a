"""Closed-form sphere sizes and bounds for single/multiple duplication errors.

Each function here has an enumeration counterpart in dupcodes.channel; the
test suite keeps the two routes in exact agreement on exhaustive ranges.

Column and row indices of the palindrome matrix are 1-based to match the
position arithmetic of the deletion operations shifted by one: an all-zero
column c corresponds to a length-ell palindromic deletion at prefix
length c - 1.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .transform import derive, zero_signature
from .words import Word, run_profile


def _wt(v: Word) -> int:
    return sum(1 for s in v.symbols if s != 0)


def tandem_dup_sphere_size(x: Word, ell: int, t: int) -> int:
    """Size of the radius-t tandem duplication sphere: C(wt_H(v) + t, t)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    v = derive(x, ell).v
    return comb(_wt(v) + t, t)


def _bounded_compositions(bounds, total: int) -> int:
    """Number of integer vectors 0 <= s <= bounds with sum(s) = total."""
    counts = [0] * (total + 1)
    counts[0] = 1
    for b in bounds:
        new = [0] * (total + 1)
        for acc in range(total + 1):
            if counts[acc]:
                for take in range(0, min(b, total - acc) + 1):
                    new[acc + take] += counts[acc]
        counts = new
    return counts[total]


def tandem_del_sphere_size(x: Word, ell: int, t: int) -> int:
    """Size of the radius-t tandem deletion sphere.

    Counts the vectors s below the zero-signature with |s|_1 = t; zero when
    the signature total is smaller than t. For t = 1 this is the Hamming
    weight of the signature.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    sig = zero_signature(derive(x, ell).v, ell)
    if sum(sig) < t:
        return 0
    if t == 1:
        return sum(1 for c in sig if c > 0)
    return _bounded_compositions(sig, t)


def pal_dup_sphere_size_l1(x: Word) -> int:
    """Single palindromic duplications of length 1: one outcome per run."""
    return run_profile(x).num_runs


def pal_dup_sphere_size_l2(x: Word) -> int:
    """Exact size of the single palindromic duplication sphere for ell = 2:
    2 r(x) - r^(1)(x) - 1."""
    if len(x) < 2:
        raise ValueError("need |x| >= 2 for length-2 duplications")
    prof = run_profile(x)
    return 2 * prof.num_runs - prof.count_of_length(1) - 1


def pal_dup_sphere_upper_bound(x: Word, ell: int) -> int:
    """Upper bound n - ell + 1 - sum_{i > ell} (i - ell) r^(i)(x) on the
    single palindromic duplication sphere; exact for ell <= 2."""
    if len(x) < ell:
        raise ValueError("need |x| >= ell")
    prof = run_profile(x)
    n = len(x)
    excess = sum((r - ell) for r in prof.lengths if r > ell)
    return n - ell + 1 - excess


def pal_del_sphere_size_l1(x: Word) -> int:
    """Single palindromic deletions of length 1: number of runs of length >= 2."""
    return run_profile(x).count_at_least(2)


def pal_del_sphere_size_l2_binary(x: Word) -> int:
    """Exact single palindromic deletion sphere size for ell = 2 over q = 2.

    Interior length-2 runs (touching neither end of the word) plus runs of
    length >= 4. Words shorter than 4 have no deletion window and yield 0.
    """
    if x.q != 2:
        raise ValueError("binary only: this closed form holds for q = 2")
    prof = run_profile(x)
    n = len(x)
    interior2 = 0
    start = 0
    for r in prof.lengths:
        if r == 2 and start >= 1 and start + r <= n - 1:
            interior2 += 1
        start += r
    return interior2 + prof.count_at_least(4)


@dataclass(frozen=True)
class PalindromeMatrix:
    """Difference matrix whose all-zero columns mark length-ell palindromes.

    Entry (r, c), both 1-based, equals x_{c+2ell-r} - x_{c+r-1} mod q; the
    matrix has ell rows and n - 2ell + 1 columns.
    """

    entries: np.ndarray
    ell: int

    @property
    def zero_columns(self) -> list[int]:
        """1-based indices of all-zero columns."""
        mask = ~self.entries.any(axis=0)
        return [int(c) + 1 for c in np.nonzero(mask)[0]]

    def zero_column_runs(self) -> int:
        """Number of maximal blocks of consecutive all-zero columns."""
        mask = ~self.entries.any(axis=0)
        runs = 0
        prev = False
        for z in mask:
            if z and not prev:
                runs += 1
            prev = z
        return runs


def palindrome_matrix(x: Word, ell: int) -> PalindromeMatrix:
    """Build the ell x (n - 2ell + 1) palindrome-detection matrix of x."""
    n = len(x)
    if n < 2 * ell:
        raise ValueError(f"need |x| >= 2*ell, got |x|={n}, ell={ell}")
    s = x.symbols
    cols = n - 2 * ell + 1
    m = np.zeros((ell, cols), dtype=np.int64)
    for r in range(1, ell + 1):
        for c in range(1, cols + 1):
            m[r - 1, c - 1] = (s[c + 2 * ell - r - 1] - s[c + r - 2]) % x.q
    return PalindromeMatrix(m, ell)


def pal_del_sphere_upper_bound(x: Word, ell: int) -> int:
    """Upper bound on the single palindromic deletion sphere size: the number
    of runs of all-zero columns of the palindrome matrix. Adjacent zero
    columns only occur inside one long run of equal symbols, whose deletions
    all coincide, hence the grouping."""
    if len(x) < 2 * ell:
        return 0
    return palindrome_matrix(x, ell).zero_column_runs()
