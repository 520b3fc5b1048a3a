"""Three single-duplication-correcting code constructions with decoders.

* TandemVTCode corrects one tandem duplication of fixed length ell: the
  zero-signature of the difference tail must satisfy a VT-style
  position-weighted checksum, one residue per signature length. A
  duplication raises exactly one signature entry, and the weighted
  checksum pins down which one.

* PalindromicL2Code corrects one palindromic duplication of length 2 over
  the binary alphabet by constraining the number of length-1 runs mod 5
  and the run-length checksum mod 2n+1. Decoding classifies the error into
  one of five run-pattern cases from the length-1-run drift, locates the
  affected run from the checksum drift, removes the mirrored pair at that
  run boundary, and validates membership.

* PalindromeFreeCode corrects one palindromic duplication of any length
  from 2 up to n: codewords contain no length-4 window a b b a, and the
  unique palindrome-free preimage under all candidate deletions is the
  transmitted word.

The VT membership test uses the position-weighted checksum sum_k k*s_k
mod (|s|+1). A plain coordinate sum cannot distinguish which entry was
incremented (equal sums), so it could not drive the decoder; the weighted
form makes the incremented coordinate uniquely recoverable, and the
exhaustive correction tests pin this behaviour down.

Codebook enumeration and parameter sweeps run on the wordspace kernels and
are deterministic (lexicographic word order, smallest-residue tie breaks).
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import rll_weight_count
from .channel import ErrorKind, error_ball, error_sphere, palindromic_delete
from .transform import DerivativePair, assemble, derive, integrate, trunk, zero_signature
from .words import Word, format_word, parse_word, run_profile
from .wordspace import MAX_ENUMERABLE, all_words, pal2_free_mask, run_stats, signature_scan


class DecodingFailure(Exception):
    """Raised when a received word lies outside every codeword's error ball."""


def _binom(a: int, b: int) -> int:
    if a < 0 or b < 0:
        return 0
    return math.comb(a, b)


def _materialize(rows, q: int) -> list[Word]:
    return [Word(tuple(int(s) for s in row), q) for row in rows]


# ---------------------------------------------------------------------------
# Construction 1: VT constraint on the tandem zero-signature
# ---------------------------------------------------------------------------


def vt_member(s, a: int) -> bool:
    """Weighted VT test on an integer vector: sum_k k*s_k = a mod (|s|+1)."""
    s = tuple(s)
    if any(c < 0 for c in s):
        raise ValueError("signature entries must be nonnegative")
    checksum = sum(k * c for k, c in enumerate(s, start=1))
    return checksum % (len(s) + 1) == a


@dataclass(frozen=True)
class TandemVTCode:
    """Length-n code over Z_q correcting one tandem duplication of length ell.

    `a[s-1]` is the VT residue required of zero-signatures of length s, for
    s = 1 .. n - ell + 1; residues lie in 0..s.
    """

    n: int
    q: int
    ell: int
    a: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.ell <= self.n:
            raise ValueError("need 1 <= ell <= n")
        if len(self.a) != self.n - self.ell + 1:
            raise ValueError(f"need one residue per signature length 1..{self.n - self.ell + 1}")
        for s, res in enumerate(self.a, start=1):
            if not 0 <= res <= s:
                raise ValueError(f"residue a_{s}={res} outside 0..{s}")

    @classmethod
    def best(cls, n: int, q: int, ell: int, limit: int = MAX_ENUMERABLE) -> "TandemVTCode":
        a, _ = c1_best_params(n, ell, q, limit=limit)
        return cls(n, q, ell, a)


def c1_member(x: Word, code: TandemVTCode) -> bool:
    """Membership: the zero-signature of the difference tail satisfies the
    VT residue for its length."""
    if x.q != code.q:
        raise ValueError(f"alphabet mismatch: word q={x.q}, code q={code.q}")
    if len(x) != code.n:
        raise ValueError(f"length mismatch: |x|={len(x)}, code n={code.n}")
    sig = zero_signature(derive(x, code.ell).v, code.ell)
    return vt_member(sig, code.a[len(sig) - 1])


def c1_decode(y: Word, code: TandemVTCode) -> Word:
    """Correct at most one tandem duplication of length ell.

    A duplication increments one signature entry; the weighted checksum
    drift identifies the unique coordinate whose decrement restores the
    residue. The repaired signature is reassembled with the unchanged head
    and trunk.
    """
    n, ell = code.n, code.ell
    if y.q != code.q:
        raise ValueError(f"alphabet mismatch: word q={y.q}, code q={code.q}")
    if len(y) == n:
        if c1_member(y, code):
            return y
        raise DecodingFailure("decoding failure: received word is not a codeword")
    if len(y) != n + ell:
        raise DecodingFailure(f"decoding failure: length {len(y)} not in {{{n}, {n + ell}}}")
    pair = derive(y, ell)
    sig = list(zero_signature(pair.v, ell))
    s = len(sig)
    if not 1 <= s <= len(code.a):
        raise DecodingFailure("decoding failure: signature length outside the code's range")
    residue = code.a[s - 1]
    repaired = None
    for k in range(s):
        if sig[k] < 1:
            continue
        sig[k] -= 1
        if vt_member(sig, residue):
            if repaired is not None:
                raise DecodingFailure("decoding failure: ambiguous signature coordinate")
            repaired = tuple(sig)
        sig[k] += 1
    if repaired is None:
        raise DecodingFailure("decoding failure: no signature coordinate restores the residue")
    v = assemble(trunk(pair.v, ell), repaired, ell)
    result = integrate(DerivativePair(pair.u, v))
    if not c1_member(result, code):
        raise DecodingFailure("decoding failure: repaired word is not a codeword")
    return result


def c1_best_params(n: int, ell: int, q: int, limit: int = MAX_ENUMERABLE):
    """Best residue per signature length (ties to the smallest residue) and
    the resulting code cardinality, by a full scan of Z_q^n."""
    arr = all_words(n, q, limit=limit)
    sig_len, _, csum = signature_scan(arr, ell)
    residues = csum % (sig_len + 1)
    a = []
    total = 0
    for s in range(1, n - ell + 2):
        counts = np.bincount(residues[sig_len == s], minlength=s + 1)
        best = int(np.argmax(counts))
        a.append(best)
        total += int(counts[best])
    return tuple(a), total


def c1_size_lower_bound(n: int, ell: int, q: int) -> Fraction:
    """Pigeonhole guarantee on the best-residue cardinality:
    q^ell * sum_nu sum_w A(n-(nu+1)ell, ell-1, w) * C(w+nu, nu) / (w+2)."""
    total = Fraction(0)
    for nu in range(n // ell):
        m = n - (nu + 1) * ell
        for w in range(m + 1):
            cnt = rll_weight_count(m, ell - 1, w, q)
            if cnt:
                total += Fraction(cnt * _binom(w + nu, nu), w + 2)
    return q**ell * total


def c1_codebook(code: TandemVTCode, limit: int = MAX_ENUMERABLE) -> list[Word]:
    """All codewords in lexicographic order."""
    arr = all_words(code.n, code.q, limit=limit)
    sig_len, _, csum = signature_scan(arr, code.ell)
    residues = csum % (sig_len + 1)
    wanted = np.asarray(code.a, dtype=np.int64)[sig_len - 1]
    return _materialize(arr[residues == wanted], code.q)


# ---------------------------------------------------------------------------
# Construction 2: binary, palindromic duplications of length 2
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PalindromicL2Code:
    """Binary length-n code correcting one palindromic duplication of
    length 2: r^(1)(x) = a mod 5 and run checksum C(x) = b mod 2n+1."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.a <= 4:
            raise ValueError("a must be in 0..4")
        if not 0 <= self.b <= 2 * self.n:
            raise ValueError(f"b must be in 0..{2 * self.n}")

    @classmethod
    def best(cls, n: int, limit: int = MAX_ENUMERABLE) -> "PalindromicL2Code":
        (a, b), _ = c2_best_params(n, limit=limit)
        return cls(n, a, b)


def c2_member(x: Word, code: PalindromicL2Code) -> bool:
    if x.q != 2:
        raise ValueError("binary only: the run-profile construction requires q = 2")
    if len(x) != code.n:
        raise ValueError(f"length mismatch: |x|={len(x)}, code n={code.n}")
    prof = run_profile(x)
    return (
        prof.count_of_length(1) % 5 == code.a
        and prof.checksum() % (2 * code.n + 1) == code.b
    )


def c2_decode(y: Word, code: PalindromicL2Code) -> Word:
    """Correct at most one palindromic duplication of length 2.

    The drift of the length-1-run count mod 5 selects one of five run
    patterns around the duplication site; the run-checksum drift mod 2n+1
    locates the run j it happened in. Every candidate is realised as an
    actual mirrored-pair deletion (the four-symbol window must match) and
    validated for membership; exactly one distinct preimage survives. The
    modulus always uses the code's n, never the received length.
    """
    if y.q != 2:
        raise ValueError("binary only: the run-profile construction requires q = 2")
    n = code.n
    modulus = 2 * n + 1
    if len(y) == n:
        if c2_member(y, code):
            return y
        raise DecodingFailure("decoding failure: received word is not a codeword")
    if len(y) != n + 2:
        raise DecodingFailure(f"decoding failure: length {len(y)} not in {{{n}, {n + 2}}}")

    prof = run_profile(y)
    lengths = prof.lengths
    r = prof.num_runs
    starts = [0]
    for length in lengths[:-1]:
        starts.append(starts[-1] + length)
    # suffix[k] = total length of runs k..r (1-based)
    suffix = [0] * (r + 2)
    for k in range(r, 0, -1):
        suffix[k] = suffix[k + 1] + lengths[k - 1]

    delta = (prof.count_of_length(1) - code.a) % 5
    drift = (prof.checksum() - code.b) % modulus

    def run_end(j: int) -> int:  # deletion position at the boundary after run j
        return starts[j - 1] + lengths[j - 1] - 1

    candidates: list[int] = []
    if delta == 0:
        # same-run duplication aa -> aaaa (even drift 2j), or the mirrored
        # pair landed on the last symbol: ...ab -> ...abba (drift 2r(y)-1)
        if drift % 2 == 0 and drift != 0:
            j = drift // 2
            if 1 <= j <= r:
                candidates.append(starts[j - 1])
        elif drift == (2 * r - 1) % modulus:
            candidates.append(len(y) - 4)
    elif delta in (4, 3):
        # one or two length-1 runs absorbed right of the site; drift 2j+3
        if drift % 2 == 1:
            j = (drift - 3) // 2
            if 1 <= j <= r - 2:
                candidates.append(run_end(j))
    elif delta == 2:
        # two new length-1 runs: interior ab|ba pattern, or ab|b at the end
        for j in range(1, r - 3):
            if (2 * j + 5 + 2 * suffix[j + 4]) % modulus == drift:
                candidates.append(run_end(j))
        if r >= 4 and drift == (2 * r - 1) % modulus:
            candidates.append(run_end(r - 3))
    else:  # delta == 1: duplication before a longer run of the second symbol
        for j in range(1, r - 2):
            if (2 * j + 3 + 2 * suffix[j + 3]) % modulus == drift:
                candidates.append(run_end(j))

    survivors: set[Word] = set()
    for p in candidates:
        if not 0 <= p <= len(y) - 4:
            continue
        try:
            candidate = palindromic_delete(y, 2, p)
        except ValueError:
            continue  # window is not a mirrored pair; rejected candidate run
        if c2_member(candidate, code):
            survivors.add(candidate)
    if len(survivors) == 1:
        return survivors.pop()
    raise DecodingFailure(
        f"decoding failure: {len(survivors)} consistent preimages (case {delta}, drift {drift})"
    )


def c2_best_params(n: int, limit: int = MAX_ENUMERABLE):
    """Best (a, b) pair (lexicographic tie-break) and its cardinality."""
    arr = all_words(n, 2, limit=limit)
    _, len1, csum = run_stats(arr)
    modulus = 2 * n + 1
    keys = (len1 % 5) * modulus + (csum % modulus)
    counts = np.bincount(keys, minlength=5 * modulus)
    idx = int(np.argmax(counts))
    return (idx // modulus, idx % modulus), int(counts[idx])


def c2_size_lower_bound(n: int) -> Fraction:
    """Pigeonhole guarantee 2^n / (5 (2n+1)) on the best (a, b) cardinality."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(2**n, 5 * (2 * n + 1))


def c2_codebook(code: PalindromicL2Code, limit: int = MAX_ENUMERABLE) -> list[Word]:
    """All codewords in lexicographic order."""
    arr = all_words(code.n, 2, limit=limit)
    _, len1, csum = run_stats(arr)
    mask = (len1 % 5 == code.a) & (csum % (2 * code.n + 1) == code.b)
    return _materialize(arr[mask], 2)


# ---------------------------------------------------------------------------
# Construction 3: palindrome-free words, any duplication length >= 2
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PalindromeFreeCode:
    """Code of all 2-palindrome-free words of length n over Z_q; corrects a
    single palindromic duplication of any length 2..n."""

    n: int
    q: int


def cpf_member(x: Word) -> bool:
    """True iff x contains no window a b b a (equivalently, no length-2
    palindromic deletion is possible). Words of length <= 3 always qualify."""
    s = x.symbols
    return not any(
        s[p] == s[p + 3] and s[p + 1] == s[p + 2] for p in range(len(s) - 3)
    )


def cpf_decode(y: Word, n: int) -> Word:
    """Correct one palindromic duplication of length |y| - n >= 2.

    Tries the deletion at every admissible position and returns the unique
    palindrome-free outcome. Length-1 duplications are outside this code's
    error model and are rejected up front.
    """
    ell = len(y) - n
    if ell < 0:
        raise DecodingFailure("decoding failure: received word shorter than the code length")
    if ell == 0:
        if cpf_member(y):
            return y
        raise DecodingFailure("decoding failure: received word is not palindrome-free")
    if ell == 1:
        raise ValueError("unsupported duplication length 1; this code corrects lengths 2..n")
    survivors: set[Word] = set()
    for p in range(len(y) - 2 * ell + 1):
        try:
            candidate = palindromic_delete(y, ell, p)
        except ValueError:
            continue
        if cpf_member(candidate):
            survivors.add(candidate)
    if len(survivors) == 1:
        return survivors.pop()
    raise DecodingFailure(f"decoding failure: {len(survivors)} palindrome-free preimages")


def cpf_count_recursive(n: int, q: int) -> int:
    """Exact number of 2-palindrome-free words of length n over Z_q.

    Tracks counts by the equality pattern of the last three symbols
    (aaa, aab, aba, abb, abc); appending a symbol is legal unless it closes
    an a b b a window, which gives a linear recursion on the five counts.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if q < 2:
        raise ValueError("q must be >= 2")
    if n <= 3:
        return q**n
    aaa = q
    aab = aba = abb = q * (q - 1)
    abc = q * (q - 1) * (q - 2)
    for _ in range(n - 3):
        aaa, aab, aba, abb, abc = (
            abb,
            (q - 1) * aaa + (q - 2) * abb,
            aab + aba + abc,
            aab + aba + abc,
            (q - 2) * (aab + aba + abc),
        )
    return aaa + aab + aba + abb + abc


def _cpf_cubic_roots(q: int) -> np.ndarray:
    """Roots of -x^3 + (q-1) x^2 + (q-2) x + (q-1) = 0."""
    roots = np.roots([-1.0, float(q - 1), float(q - 2), float(q - 1)])
    for lam in roots:
        residual = abs(-lam**3 + (q - 1) * lam**2 + (q - 2) * lam + (q - 1))
        if residual > 1e-12 * max(1.0, abs(lam) ** 3):
            raise ArithmeticError(f"cubic root residual {residual} too large for q={q}")
    return roots


def cpf_count_closed(n: int, q: int) -> float:
    """Closed form of cpf_count_recursive via the cubic's roots: the count is
    sum_i c_i(q) * lambda_i^(n-3) with rational-in-lambda coefficients.
    Complex arithmetic; the imaginary parts cancel."""
    if n < 3:
        raise ValueError("closed form needs n >= 3")
    total = 0j
    for lam in _cpf_cubic_roots(q):
        num = (q * q + q) * lam**2 + (q * q - 1) * lam + q * q
        den = (q - 1) * lam**2 + (2 * q - 4) * lam + (3 * q - 3)
        total += q * (q - 1) * num / den * lam ** (n - 3)
    if abs(total.imag) > 1e-6 * max(1.0, abs(total.real)):
        raise ArithmeticError(f"imaginary residue {total.imag} did not cancel")
    return total.real


def cpf_lambda(q: int) -> float:
    """Dominant cubic root in closed (Cardano) form; the asymptotic growth
    rate of the palindrome-free count."""
    if q < 2:
        raise ValueError("q must be >= 2")
    a = (q - 1) / 2 + (q - 1) * (q - 2) / 6 + (q - 1) ** 3 / 27
    b = (q - 2) / 3 + (q - 1) ** 2 / 9
    s = cmath.sqrt(a * a - b**3)
    u = (a + s) ** (1 / 3)
    if abs(u) < 1e-300:
        u = (a - s) ** (1 / 3)
    v = b / u if u != 0 else 0j
    return ((q - 1) / 3 + u + v).real


def cpf_rate(q: int, n=None) -> float:
    """Code rate log_q(count)/n; n=None (or inf) gives the asymptotic rate
    log_q(lambda(q))."""
    if n is None or n == math.inf:
        return math.log(cpf_lambda(q), q)
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.log(cpf_count_recursive(n, q), q) / n


def cpf_rate_table(q_list, n_list) -> list[dict]:
    """Flat rate table; entries {'q', 'n', 'rate'} with n None for the
    asymptotic column."""
    rows = []
    for q in q_list:
        for n in n_list:
            key = None if (n is None or n == math.inf) else int(n)
            rows.append({"q": q, "n": key, "rate": cpf_rate(q, key)})
    return rows


def cpf_codebook(n: int, q: int, limit: int = MAX_ENUMERABLE) -> list[Word]:
    """All 2-palindrome-free words of length n in lexicographic order."""
    arr = all_words(n, q, limit=limit)
    return _materialize(arr[pal2_free_mask(arr)], q)


# ---------------------------------------------------------------------------
# generic machinery
# ---------------------------------------------------------------------------


def oracle_decode(y: Word, n: int, kind: ErrorKind, member) -> Word:
    """Ground-truth decoder: enumerate all (|y|-n)/ell deletion outcomes of
    the kind and return the unique one satisfying the membership predicate.

    Raises DecodingFailure('uncorrectable ...') when no preimage is a member
    and DecodingFailure('not a correcting code ...') when several are; the
    latter signals a broken code, not a channel error.
    """
    if len(y) < n or (len(y) - n) % kind.ell != 0:
        raise ValueError(f"received length {len(y)} unreachable from n={n} by {kind}")
    t = (len(y) - n) // kind.ell
    del_kind = kind.inverse() if kind.is_duplication else kind
    survivors = [w for w in error_sphere(y, del_kind, t).members if member(w)]
    if not survivors:
        raise DecodingFailure("uncorrectable: no codeword reaches the received word")
    if len(survivors) > 1:
        raise DecodingFailure("not a correcting code: several codewords reach the received word")
    return survivors[0]


def disjoint_ball_violation(codebook, kind: ErrorKind, t: int):
    """First pair of codewords whose radius-t balls intersect, as
    (first, second, shared word), or None when all balls are disjoint."""
    owner: dict[Word, Word] = {}
    for c in codebook:
        for member in error_ball(c, kind, t):
            prev = owner.get(member)
            if prev is not None and prev != c:
                return (prev, c, member)
            owner[member] = c
    return None


def encode_index(codebook: list[Word], index: int) -> Word:
    """Enumeration-based encoder: message index -> codeword.

    Plumbing over the sorted codebook; the constructions define codes as
    subsets, not as images of an algebraic encoder map.
    """
    if not 0 <= index < len(codebook):
        raise ValueError(f"index {index} outside 0..{len(codebook) - 1}")
    return codebook[index]


def format_codebook(codebook: list[Word]) -> str:
    """Codebook export format: one word per line in the text word format."""
    return "".join(format_word(c) + "\n" for c in codebook)


def parse_codebook(text: str, q: int) -> list[Word]:
    return [parse_word(line, q) for line in text.splitlines() if line.strip()]


def code_params(code) -> dict:
    """JSON-ready parameter record identifying one construction instance."""
    if isinstance(code, TandemVTCode):
        return {"construction": "c1", "n": code.n, "q": code.q, "l": code.ell, "a": list(code.a)}
    if isinstance(code, PalindromicL2Code):
        return {"construction": "c2", "n": code.n, "q": 2, "l": 2, "a": code.a, "b": code.b}
    if isinstance(code, PalindromeFreeCode):
        return {"construction": "cpf", "n": code.n, "q": code.q}
    raise TypeError(f"not a code object: {code!r}")


def code_from_params(params: dict):
    """Inverse of code_params."""
    kind = params["construction"]
    if kind == "c1":
        return TandemVTCode(params["n"], params["q"], params["l"], tuple(params["a"]))
    if kind == "c2":
        return PalindromicL2Code(params["n"], params["a"], params["b"])
    if kind == "cpf":
        return PalindromeFreeCode(params["n"], params["q"])
    raise ValueError(f"unknown construction id {kind!r}")
