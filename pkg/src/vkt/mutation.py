"""Tangle blocks in Gauss codes and Conway mutation by positive
reflection and positive rotation.

A mutation tangle occupies two disjoint contiguous cyclic index ranges
(the two visits to the tangle).  The closure condition says every
crossing occurring inside the ranges occurs only inside them, so each
in-block crossing is a homebody (both occurrences in one block) or a
traveler (one occurrence in each block).

Reflection exchanges the two blocks, keeps each block's internal order,
complements every passage in the moved content, and keeps all signs.
Rotation exchanges the blocks with each block's internal order reversed,
again complementing passages and keeping signs; this form reproduces the
known mutant pairs and fixes the degenerate one-crossing tangle, which a
plain order-reversing exchange does not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gauss import GaussCode, GaussError, ensure_valid, flip_passage, GaussEntry
from .invariants import LaurentPoly, affine_index_polynomial

__all__ = [
    "BlockPair",
    "BlockReport",
    "MutationKind",
    "validate_blocks",
    "ensure_valid_blocks",
    "enumerate_block_pairs",
    "mutate_reflection",
    "mutate_rotation",
    "MutationRow",
    "MutationReport",
    "mutation_detection_report",
]

from enum import Enum


class MutationKind(Enum):
    POSITIVE_REFLECTION = "reflection"
    POSITIVE_ROTATION = "rotation"


@dataclass(frozen=True, order=True)
class BlockPair:
    """Two disjoint contiguous cyclic ranges, stored as (start, length)."""

    first: tuple[int, int]
    second: tuple[int, int]

    @classmethod
    def from_inclusive(cls, first: tuple[int, int], second: tuple[int, int],
                       n: int) -> "BlockPair":
        """Build from zero-based inclusive cyclic ranges a..b."""

        def to_sl(rng: tuple[int, int]) -> tuple[int, int]:
            a, b = rng
            if not (0 <= a < n and 0 <= b < n):
                raise GaussError(f"range {a}..{b} out of bounds for length {n}")
            return (a, (b - a) % n + 1)

        return cls(to_sl(first), to_sl(second))

    @classmethod
    def from_text(cls, text: str, n: int) -> "BlockPair":
        """Parse the CLI form ``a..b,c..d``."""
        try:
            parts = text.split(",")
            (a, b), (c, d) = (tuple(int(x) for x in p.split("..")) for p in parts)
        except (ValueError, TypeError) as exc:
            raise GaussError(f"bad block syntax {text!r}, expected a..b,c..d") from exc
        return cls.from_inclusive((a, b), (c, d), n)

    def positions(self, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        def span(rng: tuple[int, int]) -> tuple[int, ...]:
            start, length = rng
            return tuple((start + i) % n for i in range(length))

        return span(self.first), span(self.second)

    def describe(self) -> str:
        def inc(rng: tuple[int, int]) -> str:
            start, length = rng
            if length == 0:
                return f"{start}..(empty)"
            return f"{start}..{start + length - 1}"

        return f"{inc(self.first)},{inc(self.second)}"


@dataclass(frozen=True)
class BlockReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_blocks(code: GaussCode, pair: BlockPair) -> BlockReport:
    """Check disjointness and the closure condition."""
    n = len(code)
    problems: list[str] = []
    for rng in (pair.first, pair.second):
        start, length = rng
        if length < 0 or length > n or (n == 0 and length > 0):
            problems.append(f"range at {start} has bad length {length}")
        elif n and not 0 <= start < n:
            problems.append(f"range start {start} out of bounds")
    if problems:
        return BlockReport(tuple(problems))
    p1, p2 = pair.positions(n)
    if set(p1) & set(p2):
        problems.append("ranges overlap")
    inside = set(p1) | set(p2)
    for c in code.crossings():
        occ = code.positions(c)
        ins = [i for i in occ if i in inside]
        if 0 < len(ins) < len(occ):
            problems.append(f"crossing {c} leaks out of the blocks")
    return BlockReport(tuple(problems))


def ensure_valid_blocks(code: GaussCode, pair: BlockPair) -> None:
    report = validate_blocks(code, pair)
    if not report.ok:
        raise GaussError("invalid block pair: " + "; ".join(report.violations))


def enumerate_block_pairs(code: GaussCode) -> tuple[BlockPair, ...]:
    """All valid pairs of nonempty, non-spanning ranges, up to swapping."""
    ensure_valid(code)
    n = len(code)
    if n == 0:
        return ()
    seen: set[frozenset] = set()
    out: list[BlockPair] = []
    for s1 in range(n):
        for l1 in range(1, n):
            pos1 = frozenset((s1 + i) % n for i in range(l1))
            for s2 in range(n):
                for l2 in range(1, n - l1 + 1):
                    pos2 = frozenset((s2 + i) % n for i in range(l2))
                    if pos1 & pos2:
                        continue
                    key = frozenset((pos1, pos2))
                    if key in seen:
                        continue
                    seen.add(key)
                    pair = BlockPair((s1, l1), (s2, l2))
                    if validate_blocks(code, pair).ok:
                        out.append(pair)
    return tuple(sorted(out))


def _exchange(code: GaussCode, pair: BlockPair, reverse_blocks: bool,
              flip_passages: bool) -> GaussCode:
    """Exchange the two blocks' contents, preserving the gap segments.

    The rebuilt word keeps the original basepoint: it coincides with an
    in-place exchange whenever the blocks have equal length.
    """
    ensure_valid(code)
    ensure_valid_blocks(code, pair)
    n = len(code)
    if n == 0:
        return code
    if pair.first[1] == 0 and pair.second[1] == 0:
        return code
    if pair.first[1] == 0:
        # anchor the rebuild at the nonempty block
        return _exchange(code, BlockPair(pair.second, pair.first),
                         reverse_blocks, flip_passages)
    s1, l1 = pair.first
    shifted = code.rotated(s1)
    s2 = (pair.second[0] - s1) % n
    l2 = pair.second[1]
    if l2 == 0 and s2 < l1:
        raise GaussError("empty target range lies inside the moved block")
    block1 = list(shifted.entries[:l1])
    gap1 = shifted.entries[l1:s2]
    block2 = list(shifted.entries[s2:s2 + l2])
    gap2 = shifted.entries[s2 + l2:]
    if reverse_blocks:
        block1.reverse()
        block2.reverse()
    if flip_passages:
        block1 = [GaussEntry(e.crossing, flip_passage(e.passage), e.sign)
                  for e in block1]
        block2 = [GaussEntry(e.crossing, flip_passage(e.passage), e.sign)
                  for e in block2]
    rebuilt = tuple(block2) + gap1 + tuple(block1) + gap2
    return GaussCode(rebuilt).rotated(-s1 % n)


def mutate_reflection(code: GaussCode, pair: BlockPair) -> GaussCode:
    """Positive reflection: exchange blocks, keep internal order, flip
    every passage in the moved content, keep signs.  The polynomial
    invariants cannot detect this mutation."""
    return _exchange(code, pair, reverse_blocks=False, flip_passages=True)


def mutate_rotation(code: GaussCode, pair: BlockPair) -> GaussCode:
    """Positive rotation: exchange blocks with internal order reversed,
    flip every passage in the moved content, keep signs."""
    return _exchange(code, pair, reverse_blocks=True, flip_passages=True)


@dataclass(frozen=True)
class MutationRow:
    before: LaurentPoly
    after: LaurentPoly

    @property
    def detected(self) -> bool:
        return self.before != self.after


@dataclass(frozen=True)
class MutationReport:
    rows: dict[str, MutationRow]


def mutation_detection_report(code: GaussCode, pair: BlockPair) -> MutationReport:
    """Run both mutation kinds and compare polynomials.

    Reflection rows always read detected=False.
    """
    ensure_valid_blocks(code, pair)
    before = affine_index_polynomial(code)
    rows = {}
    for kind, op in (
        (MutationKind.POSITIVE_REFLECTION, mutate_reflection),
        (MutationKind.POSITIVE_ROTATION, mutate_rotation),
    ):
        after = affine_index_polynomial(op(code, pair))
        rows[kind.value] = MutationRow(before, after)
    return MutationReport(rows)
