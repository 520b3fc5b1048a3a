"""Words over Z_q and their run statistics.

A word is an immutable sequence of symbols from {0, ..., q-1} that carries
its alphabet size. All operations are pure; words hash and compare by
(symbols, q), so words over different alphabets never compare equal and
mixing them in binary operations raises ValueError.

Positions handed to the error operations elsewhere in this package are
0-based prefix lengths; symbols are referred to 1-based (x_1 ... x_n) in
documentation and error messages.
"""

from dataclasses import dataclass
from itertools import groupby


@dataclass(frozen=True, slots=True)
class Word:
    """Immutable word over the integers modulo q."""

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"alphabet size must be >= 2, got q={self.q}")
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise ValueError(f"symbol {s} outside alphabet range 0..{self.q - 1}")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self):
        return format_word(self)

    def replace(self, symbols) -> "Word":
        """New word over the same alphabet with different symbols."""
        return Word(tuple(symbols), self.q)


def word(symbols, q: int) -> Word:
    """Convenience constructor accepting any iterable of symbols."""
    return Word(tuple(symbols), q)


def require_same_alphabet(x: Word, y: Word):
    if x.q != y.q:
        raise ValueError(f"alphabet mismatch: q={x.q} vs q={y.q}")


def parse_word(text: str, q: int) -> Word:
    """Parse the textual word format.

    For q <= 10 a word is a digit string ("11110220"); for q > 10 it is a
    comma-separated list of integers ("12,0,11"). A comma-separated string
    is accepted for any q.
    """
    text = text.strip()
    if text == "":
        return Word((), q)
    if "," in text:
        symbols = tuple(int(part) for part in text.split(","))
    else:
        if q > 10:
            raise ValueError("words over q > 10 must be comma-separated")
        symbols = tuple(int(ch) for ch in text)
    return Word(symbols, q)


def format_word(x: Word) -> str:
    """Inverse of parse_word: digit string for q <= 10, else comma-separated."""
    if x.q <= 10:
        return "".join(str(s) for s in x.symbols)
    return ",".join(str(s) for s in x.symbols)


@dataclass(frozen=True, slots=True)
class RunProfile:
    """Lengths of the maximal blocks of equal symbols, left to right."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        if any(r < 1 for r in self.lengths):
            raise ValueError("run lengths must be positive")

    @property
    def num_runs(self) -> int:
        return len(self.lengths)

    def count_of_length(self, i: int) -> int:
        """Number of runs of length exactly i."""
        return sum(1 for r in self.lengths if r == i)

    def count_at_least(self, i: int) -> int:
        """Number of runs of length at least i."""
        return sum(1 for r in self.lengths if r >= i)

    def checksum(self) -> int:
        """Position-weighted run-length checksum: sum of j * r_j over runs j."""
        return sum(j * r for j, r in enumerate(self.lengths, start=1))


def run_profile(x: Word) -> RunProfile:
    """Run-length profile of a nonempty word."""
    if len(x) == 0:
        raise ValueError("empty input: run profile needs at least one symbol")
    return RunProfile(tuple(sum(1 for _ in grp) for _, grp in groupby(x.symbols)))


def run_count(x: Word) -> int:
    """Number of runs r(x)."""
    return run_profile(x).num_runs


def run_count_of_length(x: Word, i: int) -> int:
    """Number of runs of length exactly i."""
    if i < 1:
        raise ValueError("run length index must be >= 1")
    return run_profile(x).count_of_length(i)


def run_count_at_least(x: Word, i: int) -> int:
    """Number of runs of length >= i."""
    if i < 1:
        raise ValueError("run length index must be >= 1")
    return run_profile(x).count_at_least(i)


def run_checksum(x: Word) -> int:
    """Unreduced run-length checksum C(x) = sum_j j * r_j(x).

    Callers that need the residue reduce modulo 2n+1 themselves.
    """
    return run_profile(x).checksum()
