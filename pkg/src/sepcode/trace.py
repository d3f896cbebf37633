"""Colluder tracing over binary codes from a detected feasible set.

Both tracers start from the feasible set R recovered by the detector and
filter the code down to the candidate words consistent with every pinned
coordinate (positions where R is {0} or {1}).  The frameproof-code tracer
accuses exactly the filtered set.  The strongly-separable tracer then scans
every coordinate and accuses a candidate that is the unique carrier of bit
1 (or of bit 0) there; the uniqueness sets are evaluated per coordinate,
reset at each one.  Both report overflow when more than t users end up
accused.

Accusations are exact under the intended preconditions: the filtered set
equals the coalition on a t-frameproof code, and the per-coordinate unique
carriers are exactly the coalition on a strongly t-separable code, whenever
R is the descendant of a coalition of size at most t.  Outside those
preconditions the accused set is still reported, alongside the overflow
verdict when it is too large.

Reports carry an operation counter that tallies one unit per
(coordinate, codeword) touch, so a full trace costs at most 2*n*M units:
the counter is how the linear-time contract is asserted in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codes import Code, FeasibleSet, coalition_indices, descendant


@dataclass(frozen=True)
class TraceReport:
    """Outcome of one tracing run.

    ``colluders`` is the accused set; when it exceeds t the report is an
    overflow and ``identified`` is None.  ``candidates`` is the filtered
    set, and ``evidence`` lists the (position, bit, codeword) triples where
    a candidate was the unique carrier of that bit.
    """

    colluders: frozenset[int]
    overflow: bool
    t: int
    candidates: frozenset[int]
    evidence: tuple[tuple[int, int, int], ...]
    ops: int

    @property
    def identified(self) -> frozenset[int] | None:
        return None if self.overflow else self.colluders

    @property
    def message(self) -> str | None:
        return f"coalition size >= {self.t + 1}" if self.overflow else None


def _require_binary(code: Code) -> None:
    if code.q != 2:
        raise ValueError("tracing requires a binary code")


def _require_compatible(code: Code, feasible: FeasibleSet) -> None:
    if feasible.n != code.n:
        raise ValueError(
            f"feasible set has {feasible.n} positions, code has length {code.n}"
        )
    for i, allowed in enumerate(feasible.positions):
        if not allowed <= {0, 1}:
            raise ValueError(f"feasible set is not binary at position {i}")


def _pinned_rows(feasible: FeasibleSet) -> list[tuple[int, int]]:
    """(position, forced bit) for every singleton position of R."""
    pinned = []
    for j, allowed in enumerate(feasible.positions):
        if allowed == {1}:
            pinned.append((j, 1))
        elif allowed == {0}:
            pinned.append((j, 0))
    return pinned


def coalition_feasible_set(code: Code, coalition: Iterable[int]) -> FeasibleSet:
    """Feasible set a coalition exhibits: the descendant of its codewords.

    This is the combinatorial content of the noiseless detector: position i
    is {1} iff every member carries 1 there, {0} iff every member carries
    0, and {0,1} otherwise.
    """
    _require_binary(code)
    members = coalition_indices(code, coalition)
    return descendant(code.words[i] for i in members)


def lacc_identify(code: Code, feasible: FeasibleSet, t: int) -> TraceReport:
    """Frameproof-code tracer: accuse every word consistent with the pinned rows.

    On a t-frameproof code with R produced by a coalition of at most t
    members, the accused set equals the coalition exactly.
    """
    _require_binary(code)
    _require_compatible(code, feasible)
    if t < 1:
        raise ValueError("t must be at least 1")
    words = code.words
    m = code.M
    ops = 0
    keep = [True] * m
    for j, bit in _pinned_rows(feasible):
        for i in range(m):
            ops += 1
            if words[i][j] != bit:
                keep[i] = False
    accused = frozenset(i for i in range(m) if keep[i])
    return TraceReport(
        colluders=accused,
        overflow=len(accused) > t,
        t=t,
        candidates=accused,
        evidence=(),
        ops=ops,
    )


def ssc_trace(code: Code, feasible: FeasibleSet, t: int) -> TraceReport:
    """Strongly-separable tracer: accuse per-coordinate unique bit carriers.

    Filters the code by the pinned rows, then for each coordinate accuses
    the candidate that alone carries bit 1 there, and the one that alone
    carries bit 0.  On a strongly t-separable code with R the descendant of
    a coalition of at most t members, the accused set equals the coalition.
    """
    _require_binary(code)
    _require_compatible(code, feasible)
    if t < 1:
        raise ValueError("t must be at least 1")
    words = code.words
    m = code.M
    ops = 0
    keep = [True] * m
    for j, bit in _pinned_rows(feasible):
        for i in range(m):
            ops += 1
            if words[i][j] != bit:
                keep[i] = False
    candidates = frozenset(i for i in range(m) if keep[i])
    if not candidates:
        raise ValueError("infeasible R: no codeword matches every pinned coordinate")

    accused: set[int] = set()
    evidence: list[tuple[int, int, int]] = []
    for k in range(code.n):
        ones = zeros = 0
        one_at = zero_at = -1
        for i in range(m):
            ops += 1
            if not keep[i]:
                continue
            if words[i][k] == 1:
                ones += 1
                if ones == 1:
                    one_at = i
            else:
                zeros += 1
                if zeros == 1:
                    zero_at = i
        if ones == 1:
            accused.add(one_at)
            evidence.append((k, 1, one_at))
        if zeros == 1:
            accused.add(zero_at)
            evidence.append((k, 0, zero_at))

    colluders = frozenset(accused)
    return TraceReport(
        colluders=colluders,
        overflow=len(colluders) > t,
        t=t,
        candidates=candidates,
        evidence=tuple(evidence),
        ops=ops,
    )
