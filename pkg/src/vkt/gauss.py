"""Signed Gauss codes: parsing, validation, parity, writhe.

A Gauss code is a cyclic double-occurrence word: every classical crossing
of a virtual knot diagram appears exactly twice, once as an over-passage
and once as an under-passage, both occurrences carrying the crossing sign.
Virtual crossings never appear.  Position 0 is an arbitrary basepoint;
everything computed downstream is basepoint-independent.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

__all__ = [
    "OVER",
    "UNDER",
    "Parity",
    "GaussEntry",
    "GaussCode",
    "GaussError",
    "ParseError",
    "ValidationError",
    "UnknownCrossingError",
    "ValidationReport",
    "flip_passage",
    "parse_gauss",
    "validate",
    "ensure_valid",
    "writhe",
    "parity",
    "odd_writhe",
    "is_odd_virtual",
    "canonical_form",
]

OVER = "O"
UNDER = "U"


class GaussError(ValueError):
    """Base class for all Gauss-code domain errors."""


class ParseError(GaussError):
    """Lexical error in Gauss-code text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(GaussError):
    """An operation required a valid code and got an invalid one."""


class UnknownCrossingError(GaussError):
    """A named crossing does not occur in the code."""


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


def flip_passage(passage: str) -> str:
    """Complement of an over/under role; an involution."""
    return UNDER if passage == OVER else OVER


class GaussEntry(NamedTuple):
    """One passage through a crossing: (crossing id, "O"/"U", +1/-1)."""

    crossing: str
    passage: str
    sign: int

    @property
    def text(self) -> str:
        return f"{self.passage}{self.crossing}{'+' if self.sign > 0 else '-'}"

    def flipped(self) -> "GaussEntry":
        return GaussEntry(self.crossing, flip_passage(self.passage), self.sign)


@dataclass(frozen=True)
class GaussCode:
    """An immutable sequence of entries with cyclic semantics.

    Equality is entry-sequence equality (same basepoint); use
    :func:`canonical_form` to compare codes up to rotation and renaming.
    """

    entries: tuple[GaussEntry, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[GaussEntry]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> GaussEntry:
        return self.entries[i % len(self.entries)]

    @property
    def text(self) -> str:
        return "".join(e.text for e in self.entries)

    def __str__(self) -> str:
        return self.text

    def crossings(self) -> tuple[str, ...]:
        """Distinct crossing ids in order of first appearance."""
        seen: dict[str, None] = {}
        for e in self.entries:
            seen.setdefault(e.crossing, None)
        return tuple(seen)

    def positions(self, crossing: str) -> tuple[int, ...]:
        pos = tuple(i for i, e in enumerate(self.entries) if e.crossing == crossing)
        if not pos:
            raise UnknownCrossingError(f"crossing {crossing!r} not in code")
        return pos

    def passage_position(self, crossing: str, passage: str) -> int:
        for i in self.positions(crossing):
            if self.entries[i].passage == passage:
                return i
        raise UnknownCrossingError(
            f"crossing {crossing!r} has no {passage} occurrence"
        )

    def sign_of(self, crossing: str) -> int:
        return self.entries[self.positions(crossing)[0]].sign

    def rotated(self, k: int) -> "GaussCode":
        """Move the basepoint forward by k entries."""
        n = len(self.entries)
        if n == 0:
            return self
        k %= n
        return GaussCode(self.entries[k:] + self.entries[:k])

    def segment(self, start: int, stop: int) -> tuple[GaussEntry, ...]:
        """Entries strictly between positions start and stop, cyclically."""
        n = len(self.entries)
        out = []
        i = (start + 1) % n
        while i != stop:
            out.append(self.entries[i])
            i = (i + 1) % n
        return tuple(out)

    def to_json(self) -> str:
        return json.dumps(
            [
                {"crossing": e.crossing, "passage": e.passage, "sign": e.sign}
                for e in self.entries
            ]
        )

    @classmethod
    def from_json(cls, text: str) -> "GaussCode":
        data = json.loads(text)
        return cls(
            tuple(
                GaussEntry(str(d["crossing"]), d["passage"], int(d["sign"]))
                for d in data
            )
        )


_TOKEN = re.compile(r"[OoUu][A-Za-z0-9]*[+-]")
_SKIP = re.compile(r"[\s,]*")


def parse_gauss(text: str) -> GaussCode:
    """Parse Gauss-code text into a GaussCode.

    Grammar: entries are ``passage label sign`` with passage one of
    ``O``/``U`` (case-insensitive), label a nonempty alphanumeric token
    (maximal munch), sign ``+`` or ``-``; entries may be separated by
    whitespace or commas.  The empty string parses to the empty code
    (the unknot).  Double-occurrence invariants are NOT checked here;
    see :func:`validate`.
    """
    entries: list[GaussEntry] = []
    i = _SKIP.match(text, 0).end()
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"bad token {text[i:i + 8]!r}", i)
        tok = m.group(0)
        label = tok[1:-1]
        if not label:
            raise ParseError("missing crossing label", i)
        entries.append(
            GaussEntry(label, tok[0].upper(), 1 if tok[-1] == "+" else -1)
        )
        i = _SKIP.match(text, m.end()).end()
    return GaussCode(tuple(entries))


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(code: GaussCode) -> ValidationReport:
    """Check the double-occurrence invariants; violations name the crossing."""
    problems: list[str] = []
    by_crossing: dict[str, list[GaussEntry]] = {}
    for e in code.entries:
        by_crossing.setdefault(e.crossing, []).append(e)
    for crossing, occ in by_crossing.items():
        if len(occ) != 2:
            problems.append(
                f"crossing {crossing}: occurs {len(occ)} times (expected 2)"
            )
            continue
        a, b = occ
        if a.passage == b.passage:
            problems.append(
                f"crossing {crossing}: two {a.passage} passages"
                " (expected one over, one under)"
            )
        if a.sign != b.sign:
            problems.append(f"crossing {crossing}: sign mismatch")
    return ValidationReport(tuple(problems))


def ensure_valid(code: GaussCode) -> GaussCode:
    report = validate(code)
    if not report.ok:
        raise ValidationError("; ".join(report.violations))
    return code


def writhe(code: GaussCode) -> int:
    """Sum of crossing signs over distinct crossings."""
    ensure_valid(code)
    return sum(code.sign_of(c) for c in code.crossings())


def parity(code: GaussCode, crossing: str) -> Parity:
    """Even/odd by the count of entries strictly between the two occurrences.

    The total length is even, so both cyclic arcs give the same parity.
    """
    p, q = code.positions(crossing)
    return Parity.EVEN if (q - p - 1) % 2 == 0 else Parity.ODD


def odd_writhe(code: GaussCode) -> int:
    """Sum of signs over odd-parity crossings (the invariant J)."""
    ensure_valid(code)
    return sum(
        code.sign_of(c)
        for c in code.crossings()
        if parity(code, c) is Parity.ODD
    )


def is_odd_virtual(code: GaussCode) -> bool:
    """True iff every crossing is odd; vacuously true for the empty code."""
    ensure_valid(code)
    return all(parity(code, c) is Parity.ODD for c in code.crossings())


def _rotation_key(entries: tuple[GaussEntry, ...]) -> tuple:
    relabel: dict[str, int] = {}
    key = []
    for e in entries:
        if e.crossing not in relabel:
            relabel[e.crossing] = len(relabel) + 1
        key.append((relabel[e.crossing], 0 if e.passage == OVER else 1,
                    0 if e.sign > 0 else 1))
    return tuple(key)


def canonical_form(code: GaussCode) -> GaussCode:
    """Least representative over rotations and first-appearance relabelings.

    Entries compare by (relabeled id, passage with O before U, sign with
    + before -).  Idempotent; constant on rotation/relabeling orbits.
    """
    ensure_valid(code)
    n = len(code)
    if n == 0:
        return code
    best_key = None
    best_rot = 0
    for k in range(n):
        key = _rotation_key(code.rotated(k).entries)
        if best_key is None or key < best_key:
            best_key, best_rot = key, k
    rotated = code.rotated(best_rot)
    relabel: dict[str, str] = {}
    out = []
    for e in rotated.entries:
        if e.crossing not in relabel:
            relabel[e.crossing] = str(len(relabel) + 1)
        out.append(GaussEntry(relabel[e.crossing], e.passage, e.sign))
    return GaussCode(tuple(out))
