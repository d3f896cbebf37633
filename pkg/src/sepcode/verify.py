"""Verifiers for frameproof, separable, and strongly separable codes.

Three nested properties are decided for a coalition bound t:

* frameproof (``is_fpc``): no coalition of at most t codewords captures an
  outside codeword in its descendant code;
* separable (``is_sc``): distinct subsets of size at most t have distinct
  descendant codes;
* strongly separable (``is_ssc``): for every coalition of size at most t,
  the intersection of all subsets sharing its descendant code is the
  coalition itself, so the descendant pins the coalition exactly.

Frameproof implies strongly separable implies separable.  A failing verdict
carries a witness that re-verifies against the raw definition; witnesses are
chosen deterministically (lexicographically smallest failing coalition by
member indices).

``is_ssc`` decides the property through a delete-one test on the captured
set D = desc(C0) intersect C: the coalition is pinned iff no single member
x of C0 can be dropped from D without shrinking the descendant.  The
literal, exponential form of the definition is kept as ``is_ssc_naive`` and
the two are compared across randomized inputs in the test suite.  For
length-3 codes two specialized criteria are provided: a shortened-code
overlap test equivalent to 2-separability, and a forbidden-pattern scan
that decides strong 2-separability on codes already known to be
2-separable.  ``desc_cap_bound`` computes the capture bound whose value
<= 3 is a sufficient condition for strong 2-separability.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Union

from .codes import (
    Code,
    Word,
    captured_indices,
    descendant,
    hamming,
    shortened,
    words_array,
)

DEFAULT_MAX_T = 4
DEFAULT_SUBSET_CAP = 10_000_000
NAIVE_CAPTURE_BOUND = 25


@dataclass(frozen=True)
class FramingWitness:
    """A coalition whose descendant captures an outside codeword."""

    coalition: tuple[int, ...]
    framed: int
    captured: tuple[int, ...]


@dataclass(frozen=True)
class CollisionWitness:
    """Two distinct small subsets with identical descendant codes."""

    first: tuple[int, ...]
    second: tuple[int, ...]


@dataclass(frozen=True)
class AmbiguityWitness:
    """A coalition and a set with the same descendant not containing it."""

    coalition: tuple[int, ...]
    alternative: tuple[int, ...]


@dataclass(frozen=True)
class ForbiddenPatternWitness:
    """A distance-3 pair whose captured set matches pattern 1, 2, 3 or 4."""

    pair: tuple[int, int]
    pattern: int
    matched: tuple[int, ...]


@dataclass(frozen=True)
class OverlapWitness:
    """Two shortened codes at one position sharing more than one word."""

    position: int
    symbols: tuple[int, int]
    shared: tuple[Word, ...]


Witness = Union[
    FramingWitness,
    CollisionWitness,
    AmbiguityWitness,
    ForbiddenPatternWitness,
    OverlapWitness,
]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a property check; a witness is present iff it fails."""

    holds: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError("a holding verdict cannot carry a witness")
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict must carry a witness")


def _validate_t(t: int, max_t: int) -> None:
    if t < 2:
        raise ValueError("t must be at least 2")
    if t > max_t:
        raise ValueError(f"t={t} above cap {max_t}; pass a larger max_t to override")


def index_subsets_lex(count: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """Non-empty index subsets of size <= max_size, lexicographic by sorted tuple.

    Order: (0,), (0,1), (0,1,2), ..., (0,2), ..., (1,), (1,2), ...  Scanning
    in this order makes "first failure found" equal "lexicographically
    smallest failing subset".
    """

    def walk(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, count):
            cur = prefix + (i,)
            yield cur
            if len(cur) < max_size:
                yield from walk(cur, i + 1)

    return walk((), 0)


def is_fpc(code: Code, t: int, max_t: int = DEFAULT_MAX_T) -> Verdict:
    """Decide the t-frameproof property: desc(S) captures nothing outside S."""
    _validate_t(t, max_t)
    arr = words_array(code)
    for coalition in index_subsets_lex(code.M, t):
        captured = captured_indices(arr, coalition)
        if len(captured) != len(coalition):
            outside = sorted(set(captured) - set(coalition))
            return Verdict(
                False,
                FramingWitness(
                    coalition=coalition,
                    framed=outside[0],
                    captured=tuple(captured),
                ),
            )
    return Verdict(True)


def is_sc(
    code: Code,
    t: int,
    max_t: int = DEFAULT_MAX_T,
    subset_cap: int = DEFAULT_SUBSET_CAP,
) -> Verdict:
    """Decide t-separability by fingerprinting the descendant of every subset.

    Hashes the canonical feasible-set fingerprint of each subset of size
    <= t; a fingerprint collision is re-checked exactly and reported as the
    witness pair.  Refuses instances with more than ``subset_cap`` subsets.
    """
    _validate_t(t, max_t)
    total = sum(comb(code.M, k) for k in range(1, min(t, code.M) + 1))
    if total > subset_cap:
        raise ValueError(f"instance too large: {total} subsets above cap {subset_cap}")
    seen: dict[tuple[tuple[int, ...], ...], tuple[int, ...]] = {}
    for subset in index_subsets_lex(code.M, t):
        feas = descendant(code.words[i] for i in subset)
        fingerprint = feas.key()
        earlier = seen.get(fingerprint)
        if earlier is not None:
            # fingerprints are canonical; the exact recheck guards the report
            if descendant(code.words[i] for i in earlier) == feas:
                return Verdict(False, CollisionWitness(first=earlier, second=subset))
        else:
            seen[fingerprint] = subset
    return Verdict(True)


def is_ssc(code: Code, t: int, max_t: int = DEFAULT_MAX_T) -> Verdict:
    """Decide strong t-separability via the delete-one test on captured sets.

    For each coalition C0 with |C0| <= t and D = desc(C0) intersect C, the
    coalition is pinned iff desc(D minus {x}) differs from desc(C0) for
    every x in C0.  The witness prefers the disjoint alternative D minus C0
    when it has the same descendant, else D minus {x} for the first
    failing x.
    """
    _validate_t(t, max_t)
    arr = words_array(code)
    for coalition in index_subsets_lex(code.M, t):
        target = descendant(code.words[i] for i in coalition)
        captured = set(captured_indices(arr, coalition))
        for x in coalition:
            rest = sorted(captured - {x})
            if not rest:
                continue
            if descendant(code.words[i] for i in rest) != target:
                continue
            outside = sorted(captured - set(coalition))
            if outside and descendant(code.words[i] for i in outside) == target:
                alternative = tuple(outside)
            else:
                alternative = tuple(rest)
            return Verdict(
                False, AmbiguityWitness(coalition=coalition, alternative=alternative)
            )
    return Verdict(True)


def is_ssc_naive(
    code: Code,
    t: int,
    max_t: int = DEFAULT_MAX_T,
    capture_bound: int = NAIVE_CAPTURE_BOUND,
) -> Verdict:
    """Literal strong t-separability: intersect all subsets sharing a descendant.

    For each coalition C0 enumerates every non-empty subset of the captured
    set D, collects those with descendant equal to desc(C0), intersects
    them, and compares with C0.  Exponential in |D|; refuses |D| above
    ``capture_bound``.  This is the oracle the fast criterion is validated
    against.
    """
    _validate_t(t, max_t)
    arr = words_array(code)
    for coalition in index_subsets_lex(code.M, t):
        target = descendant(code.words[i] for i in coalition)
        captured = captured_indices(arr, coalition)
        if len(captured) > capture_bound:
            raise ValueError(
                f"oracle bound: captured set has {len(captured)} codewords, "
                f"above {capture_bound}"
            )
        matching: list[tuple[int, ...]] = []
        for pick in index_subsets_lex(len(captured), len(captured)):
            subset = tuple(captured[i] for i in pick)
            if descendant(code.words[i] for i in subset) == target:
                matching.append(subset)
        core = set(matching[0])
        for subset in matching[1:]:
            core &= set(subset)
        if core != set(coalition):
            alternative = next(
                subset for subset in matching if not set(coalition) <= set(subset)
            )
            return Verdict(
                False, AmbiguityWitness(coalition=coalition, alternative=alternative)
            )
    return Verdict(True)


def _forbidden_patterns(c1: Word, c2: Word) -> list[frozenset[Word]]:
    """The four captured-set patterns that break strong 2-separability.

    For a distance-3 pair c1 = (a1, b1, e1), c2 = (a2, b2, e2) the patterns
    are built from the mixed words (a1,b1,e2), (a1,b2,e1), (a2,b1,e1).
    """
    (a1, b1, e1), (a2, b2, e2) = c1, c2
    c3 = (a1, b1, e2)
    c4 = (a1, b2, e1)
    c5 = (a2, b1, e1)
    return [
        frozenset({c1, c2, c3, c4}),
        frozenset({c1, c2, c3, c5}),
        frozenset({c1, c2, c4, c5}),
        frozenset({c1, c2, c3, c4, c5}),
    ]


def forbidden_type_scan(code: Code) -> Verdict:
    """Scan a length-3 code for the four forbidden captured-set patterns.

    On codes already verified 2-separable the verdict equals
    ``is_ssc(code, 2)``.  Both orientations of each distance-3 pair are
    tried (the patterns are not symmetric under swapping the pair).
    """
    if code.n != 3:
        raise ValueError("forbidden-pattern scan is defined for length-3 codes only")
    arr = words_array(code)
    for i, j in combinations(range(code.M), 2):
        u, v = code.words[i], code.words[j]
        if hamming(u, v) != 3:
            continue
        captured = captured_indices(arr, (i, j))
        captured_words = frozenset(code.words[k] for k in captured)
        for first, second in ((u, v), (v, u)):
            for pattern_no, pattern in enumerate(
                _forbidden_patterns(first, second), start=1
            ):
                if captured_words == pattern:
                    return Verdict(
                        False,
                        ForbiddenPatternWitness(
                            pair=(i, j), pattern=pattern_no, matched=tuple(captured)
                        ),
                    )
    return Verdict(True)


def shortened_sc_check(code: Code) -> Verdict:
    """Length-3 2-separability criterion via shortened-code overlaps.

    Holds iff, at every position, any two shortened codes (one per symbol)
    share at most one length-2 word.  Equals ``is_sc(code, 2)`` for n=3.
    """
    if code.n != 3:
        raise ValueError("shortened-code criterion is defined for length-3 codes only")
    for position in range(3):
        cache = {g: shortened(code, position, g) for g in range(code.q)}
        for g1 in range(code.q):
            for g2 in range(g1 + 1, code.q):
                shared = cache[g1] & cache[g2]
                if len(shared) > 1:
                    return Verdict(
                        False,
                        OverlapWitness(
                            position=position,
                            symbols=(g1, g2),
                            shared=tuple(sorted(shared)),
                        ),
                    )
    return Verdict(True)


def desc_cap_bound(code: Code) -> int:
    """Largest captured-set size over coalitions of at most two codewords.

    A value <= 3 on a length-3 code is sufficient for strong
    2-separability, so callers may assert ``is_ssc(code, 2)`` from it.
    """
    if code.n != 3:
        raise ValueError("capture bound is defined for length-3 codes only")
    arr = words_array(code)
    best = 1
    for pair in combinations(range(code.M), 2):
        best = max(best, len(captured_indices(arr, pair)))
    return best
