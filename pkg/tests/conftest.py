"""Shared fixtures: the two worked-example codes, random code generation,
and brute-force oracles kept independent of the library's descendant
machinery."""

from __future__ import annotations

import random
from itertools import product

from sepcode.codes import Code

# (3, 4, 2): the zero word plus the three unit-weight words.  Strongly
# 2-separable but not 2-frameproof: {c2, c3} captures c1.
ZERO_PLUS_UNITS = Code.from_words(
    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], q=2
)

# (3, 5, 2): the same plus the all-ones word.  2-separable but not strongly
# 2-separable: {c1, c5} and {c2, c3, c4} share the full cube as descendant.
ZERO_UNITS_ONES = Code.from_words(
    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], q=2
)


def brute_descendant_words(words) -> set[tuple[int, ...]]:
    """All words a coalition can exhibit, by explicit product enumeration."""
    rows = [tuple(w) for w in words]
    n = len(rows[0])
    columns = [sorted({w[i] for w in rows}) for i in range(n)]
    return set(product(*columns))


def brute_captured(code: Code, members) -> frozenset[int]:
    """Oracle for desc_intersect_code: membership in the enumerated product."""
    cloud = brute_descendant_words(code.words[i] for i in members)
    return frozenset(i for i, w in enumerate(code.words) if w in cloud)


def brute_is_fpc(code: Code, t: int) -> bool:
    """Oracle for the frameproof property: check every coalition directly."""
    from itertools import combinations

    for r in range(1, t + 1):
        for coalition in combinations(range(code.M), r):
            if brute_captured(code, coalition) != frozenset(coalition):
                return False
    return True


def brute_is_sc(code: Code, t: int) -> bool:
    """Oracle for separability: compare enumerated descendants of all subsets."""
    from itertools import combinations

    seen: dict[frozenset, tuple] = {}
    for r in range(1, t + 1):
        for subset in combinations(range(code.M), r):
            cloud = frozenset(brute_descendant_words(code.words[i] for i in subset))
            if cloud in seen and seen[cloud] != subset:
                return False
            seen.setdefault(cloud, subset)
    return True


def random_code(rng: random.Random, n: int, max_m: int, max_q: int) -> Code:
    """Uniform small random code: q in 2..max_q, M distinct words of length n."""
    q = rng.randint(2, max_q)
    space = list(product(range(q), repeat=n))
    m = rng.randint(1, min(max_m, len(space)))
    return Code.from_words(rng.sample(space, m), q=q)
