"""Data model for anti-collusion fingerprinting codes.

A code is a set of M distinct length-n words over the alphabet
{0, ..., q-1}.  Codes are often displayed as n x M incidence matrices whose
columns are the codewords; this library stores one word per row, both in
memory and in the text file format.  Codeword indices and positions are
0-based throughout the library (the command line relabels codewords
1-based).

The central derived object is the feasible set: the positionwise symbol
sets R(0), ..., R(n-1) that a coalition of words can exhibit.  A coalition
holding words W can forge exactly the words of the product
W(0) x ... x W(n-1), so feasible sets double as descendant codes and as
detector output.  Descendants are kept in this product form and never
materialized as word lists except through the bounded enumeration helper.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

Word = tuple[int, ...]

# below this many matrix cells the plain-Python membership scan beats the
# numpy broadcast (call overhead dominates on desk-scale codes)
_VECTOR_CUTOFF = 256


class CodeFormatError(ValueError):
    """Malformed code file; ``line`` holds the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Symbol:
    """One alphabet letter: a residue modulo some base, or an absorbing marker.

    Markers (``infinite=True``) model adjoined elements inf_0, inf_1, ...:
    adding or multiplying a finite residue into a marker returns the marker
    unchanged.  Construction routines compute with Symbols and relabel them
    to plain integers before a Code is built.
    """

    value: int
    infinite: bool = False

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("symbol value must be non-negative")

    @classmethod
    def finite(cls, value: int, modulus: int) -> "Symbol":
        return cls(value % modulus)

    @classmethod
    def infinity(cls, index: int) -> "Symbol":
        return cls(index, infinite=True)

    def plus(self, g: int, modulus: int) -> "Symbol":
        """Shift by a finite residue; markers absorb the shift."""
        if self.infinite:
            return self
        return Symbol((self.value + g) % modulus)

    def times(self, g: int, modulus: int) -> "Symbol":
        """Scale by a finite residue; markers absorb the factor."""
        if self.infinite:
            return self
        return Symbol((self.value * g) % modulus)

    def canonical(self, finite_count: int) -> int:
        """Relabel into 0..q-1: finite u stays u, marker i becomes finite_count + i."""
        return finite_count + self.value if self.infinite else self.value


@dataclass(frozen=True)
class Code:
    """An (n, M, q) code: M distinct length-n words over {0, ..., q-1}."""

    n: int
    M: int
    q: int
    words: tuple[Word, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("code length must be at least 1")
        if self.q < 2:
            raise ValueError("alphabet size must be at least 2")
        if self.M < 1:
            raise ValueError("code must contain at least one codeword")
        if len(self.words) != self.M:
            raise ValueError(f"M={self.M} does not match {len(self.words)} codewords")
        seen: set[Word] = set()
        for w in self.words:
            if not isinstance(w, tuple) or len(w) != self.n:
                raise ValueError(f"codeword {w!r} does not have length {self.n}")
            for sym in w:
                if not isinstance(sym, int) or not 0 <= sym < self.q:
                    raise ValueError(f"symbol {sym!r} outside alphabet 0..{self.q - 1}")
            if w in seen:
                raise ValueError(f"duplicate codeword {w}")
            seen.add(w)

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]], q: int | None = None) -> "Code":
        """Build a Code from any iterable of integer sequences.

        The alphabet size defaults to one more than the largest symbol used
        (at least 2).
        """
        tup = tuple(tuple(int(s) for s in w) for w in words)
        if not tup:
            raise ValueError("code must contain at least one codeword")
        if q is None:
            q = max(2, 1 + max(max(w) for w in tup))
        return cls(n=len(tup[0]), M=len(tup), q=q, words=tup)

    @property
    def is_binary(self) -> bool:
        return self.q == 2

    def word(self, index: int) -> Word:
        if not 0 <= index < self.M:
            raise ValueError(f"codeword index {index} out of range 0..{self.M - 1}")
        return self.words[index]

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return self.M


@dataclass(frozen=True)
class FeasibleSet:
    """Positionwise symbol sets R(0), ..., R(n-1): a descendant code in product form."""

    positions: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.positions:
            raise ValueError("feasible set needs at least one position")
        for i, allowed in enumerate(self.positions):
            if not allowed:
                raise ValueError(f"empty symbol set at position {i}")

    @property
    def n(self) -> int:
        return len(self.positions)

    def __getitem__(self, position: int) -> frozenset[int]:
        return self.positions[position]

    def contains(self, word: Sequence[int]) -> bool:
        """Componentwise membership: word(i) in R(i) for every i."""
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} does not match {self.n} positions")
        return all(sym in allowed for sym, allowed in zip(word, self.positions))

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical hashable fingerprint (sorted symbols per position)."""
        return tuple(tuple(sorted(allowed)) for allowed in self.positions)

    def member_count(self) -> int:
        total = 1
        for allowed in self.positions:
            total *= len(allowed)
        return total

    def enumerate_members(self, cap: int = 10**6) -> Iterator[Word]:
        """Yield every word of the product; refuses when the product exceeds cap."""
        if self.member_count() > cap:
            raise ValueError(f"descendant has {self.member_count()} members, above cap {cap}")
        return product(*(tuple(sorted(allowed)) for allowed in self.positions))


def descendant(words: Iterable[Sequence[int]]) -> FeasibleSet:
    """Descendant code of a non-empty, uniform-length word collection."""
    rows = [tuple(w) for w in words]
    if not rows:
        raise ValueError("empty codeword set")
    n = len(rows[0])
    if any(len(w) != n for w in rows):
        raise ValueError("codewords must share one length")
    return FeasibleSet(tuple(frozenset(w[i] for w in rows) for i in range(n)))


def desc_contains(feasible: FeasibleSet, word: Sequence[int]) -> bool:
    """True iff word(i) lies in R(i) at every position."""
    return feasible.contains(word)


def coalition_indices(code: Code, members: Iterable[int]) -> tuple[int, ...]:
    """Validate coalition members against a code; returns sorted distinct indices."""
    idx = sorted({int(i) for i in members})
    if not idx:
        raise ValueError("coalition must be non-empty")
    if idx[0] < 0 or idx[-1] >= code.M:
        raise ValueError(f"codeword index out of range 0..{code.M - 1}")
    return tuple(idx)


def words_array(code: Code) -> np.ndarray:
    """The code as an (M, n) integer array (for vectorized membership scans)."""
    return np.asarray(code.words, dtype=np.int64)


def captured_indices(arr: np.ndarray, members: Sequence[int]) -> list[int]:
    """Indices of rows of ``arr`` lying in the descendant of the given rows."""
    m, n = arr.shape
    if m * n <= _VECTOR_CUTOFF:
        rows = [tuple(arr[i]) for i in members]
        allowed = [frozenset(w[j] for w in rows) for j in range(n)]
        return [
            i
            for i in range(m)
            if all(arr[i, j] in allowed[j] for j in range(n))
        ]
    sub = arr[list(members)]
    mask = (arr[:, None, :] == sub[None, :, :]).any(axis=1).all(axis=1)
    return [int(i) for i in np.flatnonzero(mask)]


def desc_intersect_code(code: Code, coalition: Iterable[int]) -> frozenset[int]:
    """Indices of codewords lying in the coalition's descendant code.

    Always a superset of the coalition itself.
    """
    members = coalition_indices(code, coalition)
    return frozenset(captured_indices(words_array(code), members))


def shortened(code: Code, position: int, symbol: int) -> frozenset[Word]:
    """Words holding ``symbol`` at ``position``, with that position deleted.

    Duplicates collapse: the result is a set, which is all the length-3
    separability criterion inspects.
    """
    if not 0 <= position < code.n:
        raise ValueError(f"position {position} out of range 0..{code.n - 1}")
    if not 0 <= symbol < code.q:
        raise ValueError(f"symbol {symbol} outside alphabet 0..{code.q - 1}")
    return frozenset(
        w[:position] + w[position + 1 :] for w in code.words if w[position] == symbol
    )


def hamming(u: Sequence[int], v: Sequence[int]) -> int:
    """Number of positions where two equal-length words differ."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


# ---------------------------------------------------------------------------
# Text formats.  Code files: header "n M q", then M rows of n symbols in
# 0..q-1, '#' comments allowed.  Feasible-set lines (binary codes only):
# n tokens from {0, 1, *}, written contiguously, parsed with or without
# whitespace.
# ---------------------------------------------------------------------------


def parse_code_text(text: str) -> Code:
    """Parse the code text format, raising CodeFormatError with a line number."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            rows.append((lineno, content.split()))
    if not rows:
        raise CodeFormatError('missing header line "n M q"', line=1)
    head_line, head = rows[0]
    if len(head) != 3:
        raise CodeFormatError('header must hold three integers "n M q"', head_line)
    try:
        n, m, q = (int(tok) for tok in head)
    except ValueError:
        raise CodeFormatError('header must hold three integers "n M q"', head_line) from None
    body = rows[1:]
    if len(body) > m:
        raise CodeFormatError(f"expected {m} codeword lines, found more", body[m][0])
    if len(body) < m:
        raise CodeFormatError(
            f"expected {m} codeword lines, found {len(body)}",
            body[-1][0] if body else head_line,
        )
    words: list[Word] = []
    for lineno, toks in body:
        if len(toks) != n:
            raise CodeFormatError(f"expected {n} symbols, found {len(toks)}", lineno)
        try:
            w = tuple(int(tok) for tok in toks)
        except ValueError:
            raise CodeFormatError("symbols must be integers", lineno) from None
        for sym in w:
            if not 0 <= sym < q:
                raise CodeFormatError(f"symbol {sym} outside alphabet 0..{q - 1}", lineno)
        words.append(w)
    try:
        return Code(n=n, M=m, q=q, words=tuple(words))
    except ValueError as exc:
        raise CodeFormatError(str(exc), head_line) from None


def format_code_text(code: Code) -> str:
    lines = [f"{code.n} {code.M} {code.q}"]
    lines.extend(" ".join(str(s) for s in w) for w in code.words)
    return "\n".join(lines) + "\n"


def read_code_file(path: str | Path) -> Code:
    return parse_code_text(Path(path).read_text())


def write_code_file(path: str | Path, code: Code) -> None:
    Path(path).write_text(format_code_text(code))


def parse_feasible_line(text: str) -> FeasibleSet:
    """Parse a binary feasible-set line of tokens 0, 1 or * ('*' means {0,1})."""
    stripped = text.strip()
    tokens = stripped.split() if any(ch.isspace() for ch in stripped) else list(stripped)
    if not tokens:
        raise ValueError("empty feasible-set line")
    sets: list[frozenset[int]] = []
    for tok in tokens:
        if tok == "0":
            sets.append(frozenset({0}))
        elif tok == "1":
            sets.append(frozenset({1}))
        elif tok == "*":
            sets.append(frozenset({0, 1}))
        else:
            raise ValueError(f"invalid feasible-set token {tok!r}; expected 0, 1 or *")
    return FeasibleSet(tuple(sets))


def format_feasible_line(feasible: FeasibleSet) -> str:
    out = []
    for i, allowed in enumerate(feasible.positions):
        if allowed == {0}:
            out.append("0")
        elif allowed == {1}:
            out.append("1")
        elif allowed == {0, 1}:
            out.append("*")
        else:
            raise ValueError(f"position {i} is not binary")
    return "".join(out)
