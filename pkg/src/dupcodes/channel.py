"""Error operations for the duplication channel.

Four single-error operations act on words: tandem duplication (a block of
ell symbols is repeated in place), palindromic duplication (the block is
repeated reversed), and the two inverse deletions, which are defined only
at positions where the required repeated/mirrored pattern is present.

Error spheres (exactly t errors) and balls (at most t errors) are
enumerated breadth first with set deduplication at each level; deletions
with t >= 2 are applied sequentially on intermediate words. Memory use is
O(|sphere| * n), which is fine at the enumerable scales this package
targets.

All functions are pure and operate on immutable words, so concurrent use
needs no synchronisation.
"""

from dataclasses import dataclass

from .words import Word, require_same_alphabet

TANDEM_DUP = "tandem-dup"
TANDEM_DEL = "tandem-del"
PAL_DUP = "pal-dup"
PAL_DEL = "pal-del"

_FAMILIES = (TANDEM_DUP, TANDEM_DEL, PAL_DUP, PAL_DEL)


@dataclass(frozen=True, slots=True)
class ErrorKind:
    """One error type: a family (tandem/palindromic, duplication/deletion)
    together with the block length ell >= 1."""

    family: str
    ell: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown error family {self.family!r}; expected one of {_FAMILIES}")
        if self.ell < 1:
            raise ValueError(f"block length must be >= 1, got ell={self.ell}")

    @property
    def is_duplication(self) -> bool:
        return self.family in (TANDEM_DUP, PAL_DUP)

    @property
    def is_tandem(self) -> bool:
        return self.family in (TANDEM_DUP, TANDEM_DEL)

    def inverse(self) -> "ErrorKind":
        """The matching deletion for a duplication and vice versa."""
        pairs = {TANDEM_DUP: TANDEM_DEL, TANDEM_DEL: TANDEM_DUP,
                 PAL_DUP: PAL_DEL, PAL_DEL: PAL_DUP}
        return ErrorKind(pairs[self.family], self.ell)

    def __str__(self):
        return f"{self.family}(ell={self.ell})"


def tandem_dup(ell: int) -> ErrorKind:
    return ErrorKind(TANDEM_DUP, ell)


def tandem_del(ell: int) -> ErrorKind:
    return ErrorKind(TANDEM_DEL, ell)


def pal_dup(ell: int) -> ErrorKind:
    return ErrorKind(PAL_DUP, ell)


def pal_del(ell: int) -> ErrorKind:
    return ErrorKind(PAL_DEL, ell)


def _check_dup_position(x: Word, ell: int, p: int):
    if ell < 1:
        raise ValueError("block length must be >= 1")
    if not 0 <= p <= len(x) - ell:
        raise ValueError(f"invalid position: p={p} not in 0..{len(x) - ell} for |x|={len(x)}, ell={ell}")


def _check_del_position(x: Word, ell: int, p: int):
    if ell < 1:
        raise ValueError("block length must be >= 1")
    if not 0 <= p <= len(x) - 2 * ell:
        raise ValueError(f"invalid position: p={p} not in 0..{len(x) - 2 * ell} for |x|={len(x)}, ell={ell}")


def tandem_duplicate(x: Word, ell: int, p: int) -> Word:
    """Insert a copy of the ell-block starting after prefix length p."""
    _check_dup_position(x, ell, p)
    s = x.symbols
    return x.replace(s[: p + ell] + s[p : p + ell] + s[p + ell :])


def palindromic_duplicate(x: Word, ell: int, p: int) -> Word:
    """Insert the reversed copy of the ell-block starting after prefix length p."""
    _check_dup_position(x, ell, p)
    s = x.symbols
    return x.replace(s[: p + ell] + s[p : p + ell][::-1] + s[p + ell :])


def tandem_delete(x: Word, ell: int, p: int) -> Word:
    """Remove the second copy of a repeated ell-block; requires x_{p+1..p+ell} = x_{p+ell+1..p+2ell}."""
    _check_del_position(x, ell, p)
    s = x.symbols
    if s[p : p + ell] != s[p + ell : p + 2 * ell]:
        raise ValueError(f"not a tandem at p={p}: block x_{p + 1}..x_{p + ell} is not repeated")
    return x.replace(s[: p + ell] + s[p + 2 * ell :])


def palindromic_delete(x: Word, ell: int, p: int) -> Word:
    """Remove the mirrored copy of an ell-block; requires x_{p+ell+1..p+2ell} reversed = x_{p+1..p+ell}."""
    _check_del_position(x, ell, p)
    s = x.symbols
    if s[p + ell : p + 2 * ell] != s[p : p + ell][::-1]:
        raise ValueError(f"not a palindrome at p={p}: x_{p + ell + 1}..x_{p + 2 * ell} does not mirror the block")
    return x.replace(s[: p + ell] + s[p + 2 * ell :])


def apply_error(x: Word, kind: ErrorKind, p: int) -> Word:
    """Apply one error of the given kind at position p."""
    op = {TANDEM_DUP: tandem_duplicate, TANDEM_DEL: tandem_delete,
          PAL_DUP: palindromic_duplicate, PAL_DEL: palindromic_delete}[kind.family]
    return op(x, kind.ell, p)


def deletion_positions(x: Word, kind: ErrorKind) -> list[int]:
    """All positions p at which the deletion of the given kind succeeds, sorted."""
    if kind.is_duplication:
        raise ValueError("deletion_positions requires a deletion kind")
    ell = kind.ell
    s = x.symbols
    out = []
    for p in range(len(s) - 2 * ell + 1):
        block = s[p : p + ell]
        tail = s[p + ell : p + 2 * ell]
        if tail == (block if kind.family == TANDEM_DEL else block[::-1]):
            out.append(p)
    return out


def error_positions(x: Word, kind: ErrorKind) -> list[int]:
    """Positions where a single error of the kind can occur."""
    if kind.is_duplication:
        return list(range(len(x) - kind.ell + 1))
    return deletion_positions(x, kind)


@dataclass(frozen=True, slots=True)
class ErrorSphere:
    """All words reachable from the center by exactly t errors of one kind."""

    center: Word
    kind: ErrorKind
    t: int
    members: frozenset[Word]

    def __len__(self):
        return len(self.members)


def _sphere_members(x: Word, kind: ErrorKind, t: int) -> frozenset[Word]:
    level = {x}
    for _ in range(t):
        nxt = set()
        for w in level:
            for p in error_positions(w, kind):
                nxt.add(apply_error(w, kind, p))
        level = nxt
        if not level:
            break
    return frozenset(level)


def error_sphere(x: Word, kind: ErrorKind, t: int) -> ErrorSphere:
    """Sphere of radius exactly t; t=0 gives {x}. Deletion spheres may be empty."""
    if t < 0:
        raise ValueError("error count t must be >= 0")
    return ErrorSphere(x, kind, t, _sphere_members(x, kind, t))


def error_ball(x: Word, kind: ErrorKind, t: int) -> frozenset[Word]:
    """Union of the spheres of radius 0..t around x."""
    if t < 0:
        raise ValueError("error count t must be >= 0")
    out = {x}
    level = {x}
    for _ in range(t):
        nxt = set()
        for w in level:
            for p in error_positions(w, kind):
                nxt.add(apply_error(w, kind, p))
        out |= nxt
        level = nxt
        if not level:
            break
    return frozenset(out)


def ball_intersection(x: Word, y: Word, kind: ErrorKind, t: int) -> frozenset[Word]:
    """Common elements of the two radius-t balls; the witnesses that x and y
    cannot coexist in a t-error-correcting code of this kind."""
    require_same_alphabet(x, y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: |x|={len(x)} vs |y|={len(y)}")
    return error_ball(x, kind, t) & error_ball(y, kind, t)


def balls_intersect(x: Word, y: Word, kind: ErrorKind, t: int) -> bool:
    """True iff the radius-t balls around x and y share an element."""
    return bool(ball_intersection(x, y, kind, t))


def same_outcome_predicate(x: Word, y: Word, ell: int, i: int, j: int, kind: str) -> bool:
    """Decide rho_ell(x, i) == rho_ell(y, i+j) without applying the operations.

    Evaluates the closed condition system on symbol positions (1-based
    internally): for duplications the system splits into the cases j < ell
    and j >= ell; deletions have a single system whose first two condition
    groups assert that the mirrored pattern is present in x at i and in y
    at i+j. The one-word variant is the specialisation y = x.

    Position ranges are validated; within range the system is evaluated
    literally, so a deletion pair whose patterns are absent yields False.
    """
    require_same_alphabet(x, y)
    n = len(x)
    if len(y) != n:
        raise ValueError("x and y must have equal length")
    if j <= 0:
        raise ValueError("offset j must be positive")
    if kind not in ("dup", "del"):
        raise ValueError("kind must be 'dup' or 'del'")

    sx = x.symbols
    sy = y.symbols

    def X(k):  # 1-based access
        return sx[k - 1]

    def Y(k):
        return sy[k - 1]

    if kind == "dup":
        if not (0 <= i and i + j <= n - ell):
            raise ValueError(f"invalid positions: need 0 <= i and i+j <= {n - ell}")
        outside = all(
            X(m) == Y(m)
            for m in list(range(1, i + ell + 1)) + list(range(i + j + ell + 1, n + 1))
        )
        if j < ell:
            return (
                outside
                and all(X(i + ell - m) == Y(i + ell + 1 + m) for m in range(j))
                and all(X(i + 1 + m) == Y(i + 2 * j + 1 + m) for m in range(ell - j))
                and all(X(i + ell + 1 + m) == Y(i + 2 * j - m) for m in range(j))
            )
        return (
            outside
            and all(X(i + ell - m) == Y(i + ell + 1 + m) for m in range(ell))
            and all(X(i + ell + 1 + m) == Y(i + 2 * ell + 1 + m) for m in range(j - ell))
            and all(X(i + j + 1 + m) == Y(i + j + ell - m) for m in range(ell))
        )

    if not (0 <= i and i + j <= n - 2 * ell):
        raise ValueError(f"invalid positions: need 0 <= i and i+j <= {n - 2 * ell}")
    return (
        all(
            X(m) == Y(m)
            for m in list(range(1, i + ell + 1)) + list(range(i + j + 2 * ell + 1, n + 1))
        )
        and all(X(i + ell - m) == X(i + ell + 1 + m) for m in range(ell))
        and all(Y(i + j + ell - m) == Y(i + j + ell + 1 + m) for m in range(ell))
        and all(X(i + 2 * ell + 1 + m) == Y(i + ell + 1 + m) for m in range(j))
    )


def sample_single_error(x: Word, kind: ErrorKind, rng) -> tuple[Word, int]:
    """Apply one uniformly random error of the kind; returns (word, position).

    Provided for channel simulation only. Raises ValueError when no position
    admits the error (possible for deletion kinds).
    """
    positions = error_positions(x, kind)
    if not positions:
        raise ValueError(f"no position in {x} admits {kind}")
    p = positions[rng.randrange(len(positions))]
    return apply_error(x, kind, p), p
