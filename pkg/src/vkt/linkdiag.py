"""Ordered two-component links from oriented smoothings, and their
linking numbers, wriggle numbers, and the chord-intersection weight.

Smoothing one crossing of a knot always yields a two-component link.
The component ordering follows the dot convention: the dot sits on the
incoming under-strand, which is the tail of the cyclic segment running
from the over-occurrence to the under-occurrence, so that segment is the
first component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .gauss import (
    OVER,
    UNDER,
    GaussCode,
    GaussEntry,
    UnknownCrossingError,
    ensure_valid,
)

__all__ = [
    "TwoComponentLink",
    "ChordIntersections",
    "smooth",
    "linking_crossings",
    "lk_over",
    "lk_under",
    "wriggle_number",
    "swap_order",
    "chord_intersections",
    "chord_weight",
]


@dataclass(frozen=True)
class TwoComponentLink:
    """Two cyclic entry sequences sharing crossing symbols.

    A crossing occurring once in each component is a linking crossing;
    one occurring twice within a single component is a self-crossing.
    """

    first: tuple[GaussEntry, ...]
    second: tuple[GaussEntry, ...]

    def to_json(self) -> str:
        def enc(entries):
            return [
                {"crossing": e.crossing, "passage": e.passage, "sign": e.sign}
                for e in entries
            ]

        return json.dumps({"first": enc(self.first), "second": enc(self.second)})

    @classmethod
    def from_json(cls, text: str) -> "TwoComponentLink":
        data = json.loads(text)

        def dec(items):
            return tuple(
                GaussEntry(str(d["crossing"]), d["passage"], int(d["sign"]))
                for d in items
            )

        return cls(dec(data["first"]), dec(data["second"]))


def smooth(code: GaussCode, crossing: str) -> TwoComponentLink:
    """Oriented smoothing of one crossing, removing its two entries.

    first = entries strictly between the over- and under-occurrence (this
    segment ends on the incoming under-strand and inherits the dot);
    second = the complementary open segment.
    """
    ensure_valid(code)
    p = code.passage_position(crossing, OVER)
    q = code.passage_position(crossing, UNDER)
    return TwoComponentLink(code.segment(p, q), code.segment(q, p))


def linking_crossings(link: TwoComponentLink) -> tuple[str, ...]:
    """Crossings with one occurrence in each component, in first-component order."""
    in_second = {e.crossing for e in link.second}
    return tuple(
        e.crossing for e in link.first if e.crossing in in_second
    )


def lk_over(link: TwoComponentLink) -> int:
    """Signed count of linking crossings met as over-passages along the
    first component."""
    in_second = {e.crossing for e in link.second}
    return sum(
        e.sign
        for e in link.first
        if e.crossing in in_second and e.passage == OVER
    )


def lk_under(link: TwoComponentLink) -> int:
    """Signed count of linking crossings met as under-passages along the
    first component."""
    in_second = {e.crossing for e in link.second}
    return sum(
        e.sign
        for e in link.first
        if e.crossing in in_second and e.passage == UNDER
    )


def wriggle_number(link: TwoComponentLink) -> int:
    """lk_over - lk_under; zero for classical links, negated by swap_order."""
    return lk_over(link) - lk_under(link)


def swap_order(link: TwoComponentLink) -> TwoComponentLink:
    """Exchange the two components; an involution."""
    return TwoComponentLink(link.second, link.first)


@dataclass(frozen=True)
class ChordIntersections:
    """Chords crossing a distinguished chord, split by intersection sign."""

    positive: frozenset[str]
    negative: frozenset[str]


def _in_open_segment(i: int, start: int, stop: int, n: int) -> bool:
    """Is position i strictly inside the cyclic segment (start, stop)?"""
    if start < stop:
        return start < i < stop
    return i > start or i < stop


def chord_intersections(code: GaussCode, crossing: str) -> ChordIntersections:
    """Classify every chord interleaving the distinguished one.

    A chord d interleaves c when exactly one of d's endpoints lies in the
    open segment from c's over-occurrence to c's under-occurrence.  d is a
    positive intersection when the endpoint inside that segment is d's
    over-occurrence (equivalently: d's over-passage lands in the first
    component of the smoothing at c), negative otherwise.
    """
    ensure_valid(code)
    n = len(code)
    p = code.passage_position(crossing, OVER)
    q = code.passage_position(crossing, UNDER)
    pos, neg = set(), set()
    for d in code.crossings():
        if d == crossing:
            continue
        i, j = code.positions(d)
        ins_i = _in_open_segment(i, p, q, n)
        ins_j = _in_open_segment(j, p, q, n)
        if ins_i == ins_j:
            continue
        inside = i if ins_i else j
        if code.entries[inside].passage == OVER:
            pos.add(d)
        else:
            neg.add(d)
    return ChordIntersections(frozenset(pos), frozenset(neg))


def chord_weight(code: GaussCode, crossing: str) -> int:
    """Sum of signs over positive intersections minus negative ones.

    Equals wriggle_number(smooth(code, crossing)) for every valid input.
    """
    sets = chord_intersections(code, crossing)
    return sum(code.sign_of(d) for d in sets.positive) - sum(
        code.sign_of(d) for d in sets.negative
    )
