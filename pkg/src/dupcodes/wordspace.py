"""Batch scans over complete word spaces Z_q^n.

Codebook enumeration, parameter sweeps, and bound tabulation all reduce to
computing a handful of per-word statistics across every word of a given
length. These scans are the hot loops of the package, so each kernel
exists twice:

  * a numba @njit row-loop version (default), and
  * a pure-numpy vectorised version.

Set DUPCODES_BACKEND=numpy to force the numpy path (or =numba to require
the compiled path); the default picks numba when importable and falls back
to numpy otherwise. benchmarks/bench_kernels.py compares the two.

Kernels take an (N, n) int8 array of words (one row per word) and return
per-row statistics:

  signature_scan(words, ell) -> (sig_len, sig_weight, vt_checksum)
      length wt_H(v)+1 of the ell-zero-signature of the difference tail,
      its number of positive entries, and the position-weighted checksum
      sum_k k * sigma_k (unreduced).
  run_stats(words) -> (run_count, len1_runs, run_checksum)
  pal2_free_mask(words) -> bool mask of words with no a b b a window
"""

import os

import numpy as np

MAX_ENUMERABLE = 1 << 20  # default guard on q**n for full-space enumeration


def all_words(n: int, q: int, limit: int = MAX_ENUMERABLE) -> np.ndarray:
    """All q**n words of length n as an (q**n, n) int8 array, lexicographic.

    Refuses spaces larger than `limit` words; pass a larger limit (or rely
    on the CLI --force flag) to override.
    """
    if n < 0 or q < 2:
        raise ValueError("need n >= 0 and q >= 2")
    if q > 127:
        raise ValueError("full-space enumeration supports q <= 127")
    total = q**n
    if total > limit:
        raise ValueError(
            f"instance too large: q^n = {q}^{n} = {total} words exceeds the guard {limit}"
        )
    out = np.empty((total, n), dtype=np.int8)
    idx = np.arange(total)
    power = 1
    for j in range(n - 1, -1, -1):
        out[:, j] = (idx // power) % q
        power *= q
    return out


# ---------------------------------------------------------------------------
# kernel bodies (plain loops; compiled by numba on the default path)
# ---------------------------------------------------------------------------


def _signature_scan_loop(words, ell):
    N, n = words.shape
    m = n - ell
    sig_len = np.empty(N, dtype=np.int64)
    sig_weight = np.empty(N, dtype=np.int64)
    checksum = np.empty(N, dtype=np.int64)
    for r in range(N):
        wt = 0
        weight = 0
        csum = 0
        zeros = 0
        gap = 1
        for i in range(m):
            if words[r, i + ell] == words[r, i]:
                zeros += 1
            else:
                blocks = zeros // ell
                if blocks > 0:
                    weight += 1
                    csum += gap * blocks
                wt += 1
                gap += 1
                zeros = 0
        blocks = zeros // ell
        if blocks > 0:
            weight += 1
            csum += gap * blocks
        sig_len[r] = wt + 1
        sig_weight[r] = weight
        checksum[r] = csum
    return sig_len, sig_weight, checksum


def _run_stats_loop(words):
    N, n = words.shape
    run_count = np.empty(N, dtype=np.int64)
    len1_runs = np.empty(N, dtype=np.int64)
    checksum = np.empty(N, dtype=np.int64)
    for r in range(N):
        runs = 1
        cur_len = 1
        singles = 0
        csum = 0
        for i in range(1, n):
            if words[r, i] != words[r, i - 1]:
                csum += runs * cur_len
                if cur_len == 1:
                    singles += 1
                runs += 1
                cur_len = 1
            else:
                cur_len += 1
        csum += runs * cur_len
        if cur_len == 1:
            singles += 1
        run_count[r] = runs
        len1_runs[r] = singles
        checksum[r] = csum
    return run_count, len1_runs, checksum


def _pal2_free_loop(words):
    N, n = words.shape
    free = np.ones(N, dtype=np.bool_)
    for r in range(N):
        for i in range(n - 3):
            if words[r, i] == words[r, i + 3] and words[r, i + 1] == words[r, i + 2]:
                free[r] = False
                break
    return free


# ---------------------------------------------------------------------------
# pure-numpy vectorised implementations
# ---------------------------------------------------------------------------


def signature_scan_numpy(words, ell):
    N, n = words.shape
    m = n - ell
    if m <= 0:
        if m < 0:
            raise ValueError("ell exceeds word length")
        z64 = np.zeros(N, dtype=np.int64)
        return np.ones(N, dtype=np.int64), z64, z64.copy()
    z = words[:, ell:] == words[:, :m]  # zero mask of the difference tail
    idx = np.arange(m)
    last_nz = np.maximum.accumulate(np.where(~z, idx, -1), axis=1)
    since = idx - last_nz  # zeros since the last nonzero, counted at zero positions
    completes = z & (since % ell == 0)  # position closes a whole ell-block
    first_block = z & (since == ell)  # first block of its gap -> one weight unit
    nonzero_before = np.cumsum(~z, axis=1)  # at zero positions: nonzeros strictly before
    gap = nonzero_before + 1
    sig_len = (~z).sum(axis=1).astype(np.int64) + 1
    sig_weight = first_block.sum(axis=1).astype(np.int64)
    checksum = (completes * gap).sum(axis=1).astype(np.int64)
    return sig_len, sig_weight, checksum


def run_stats_numpy(words):
    N, n = words.shape
    if n == 0:
        raise ValueError("run statistics need nonempty words")
    if n == 1:
        ones = np.ones(N, dtype=np.int64)
        return ones, ones.copy(), ones.copy()
    b = words[:, 1:] != words[:, :-1]
    run_count = 1 + b.sum(axis=1).astype(np.int64)
    # checksum = n + sum over boundaries k of (n-1-k): each boundary bumps the
    # run index of every later position by one
    weights = (n - 1) - np.arange(n - 1)
    checksum = n + (b * weights).sum(axis=1).astype(np.int64)
    first = b[:, 0].astype(np.int64)
    last = b[:, -1].astype(np.int64)
    if n == 2:
        singles = first + last
    else:
        singles = first + last + (b[:, :-1] & b[:, 1:]).sum(axis=1).astype(np.int64)
    return run_count, singles, checksum


def pal2_free_mask_numpy(words):
    N, n = words.shape
    if n < 4:
        return np.ones(N, dtype=np.bool_)
    hit = (words[:, :-3] == words[:, 3:]) & (words[:, 1:-2] == words[:, 2:-1])
    return ~hit.any(axis=1)


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------

_requested = os.environ.get("DUPCODES_BACKEND", "auto").strip().lower()

signature_scan_numba = None
run_stats_numba = None
pal2_free_mask_numba = None

if _requested in ("auto", "", "numba"):
    try:
        from numba import njit

        signature_scan_numba = njit(cache=True)(_signature_scan_loop)
        run_stats_numba = njit(cache=True)(_run_stats_loop)
        pal2_free_mask_numba = njit(cache=True)(_pal2_free_loop)
        _active = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        _active = "numpy"
elif _requested == "numpy":
    _active = "numpy"
else:
    raise ValueError(f"DUPCODES_BACKEND={_requested!r} not understood (use 'numba' or 'numpy')")


def backend() -> str:
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return _active


def signature_scan(words, ell):
    if _active == "numba":
        return signature_scan_numba(words, ell)
    return signature_scan_numpy(words, ell)


def run_stats(words):
    if _active == "numba":
        return run_stats_numba(words)
    return run_stats_numpy(words)


def pal2_free_mask(words):
    if _active == "numba":
        return pal2_free_mask_numba(words)
    return pal2_free_mask_numpy(words)
