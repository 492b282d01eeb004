"""Arc labeling of Gauss codes and the algebraic crossing weight.

Traveling past an entry changes the running arc label by a fixed
increment: -1 after o+, +1 after u+, +1 after o-, -1 after u-.  Each
crossing contributes one +1 and one -1, so the labels close up cyclically
for every valid code.  The weight of a crossing is the label just before
its over-passage minus the label just after its under-passage, which is
independent of the starting label and the basepoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gauss import OVER, UNDER, GaussCode, GaussEntry, Parity, ensure_valid, parity

__all__ = [
    "ArcLabels",
    "increment",
    "label_arcs",
    "cheng_labels",
    "algebraic_weight",
    "weight_table",
    "has_classical_labeling",
    "is_pure_virtual",
]


def increment(entry: GaussEntry) -> int:
    """Arc-label change when traveling past this entry."""
    return -entry.sign if entry.passage == OVER else entry.sign


@dataclass(frozen=True)
class ArcLabels:
    """Integer label per arc; labels[i] is the label just after entry i.

    The arc before entry 0 carries `offset` (equal to labels[-1] by the
    cyclic closure).  `base_position` records which entry index the offset
    precedes; it is 0 for every labeling produced here.
    """

    offset: int
    labels: tuple[int, ...]
    base_position: int = 0

    def label_after(self, i: int) -> int:
        return self.labels[i % len(self.labels)]

    def label_before(self, i: int) -> int:
        n = len(self.labels)
        return self.offset if i % n == 0 else self.labels[(i - 1) % n]


def label_arcs(code: GaussCode, start_label: int = 0) -> ArcLabels:
    """Accumulate the increments from `start_label` around the code."""
    ensure_valid(code)
    labels = []
    value = start_label
    for e in code.entries:
        value += increment(e)
        labels.append(value)
    return ArcLabels(start_label, tuple(labels))


def _over_first_sum(code: GaussCode, start_after: int) -> int:
    """Sum of signs of crossings met over-first when traversing the full
    cycle starting just after entry `start_after`."""
    n = len(code)
    total = 0
    seen: set[str] = set()
    for k in range(1, n + 1):
        e = code[start_after + k]
        if e.crossing in seen:
            continue
        seen.add(e.crossing)
        if e.passage == OVER:
            total += e.sign
    return total


def cheng_labels(code: GaussCode) -> ArcLabels:
    """Label each arc by the signed count of crossings first met as
    over-passages when traversing the whole cycle from that arc.

    Computed by literal restart-at-every-arc simulation; differs from any
    label_arcs labeling by a constant.
    """
    ensure_valid(code)
    n = len(code)
    if n == 0:
        return ArcLabels(0, ())
    labels = tuple(_over_first_sum(code, i) for i in range(n))
    return ArcLabels(labels[-1], labels)


def algebraic_weight(code: GaussCode, crossing: str) -> int:
    """Label before the over-occurrence minus label after the under-occurrence."""
    labels = label_arcs(code, 0)
    p = code.passage_position(crossing, OVER)
    q = code.passage_position(crossing, UNDER)
    return labels.label_before(p) - labels.label_after(q)


def weight_table(code: GaussCode) -> dict[str, int]:
    """algebraic_weight for every crossing of the code."""
    ensure_valid(code)
    labels = label_arcs(code, 0)
    table = {}
    for c in code.crossings():
        p = code.passage_position(c, OVER)
        q = code.passage_position(c, UNDER)
        table[c] = labels.label_before(p) - labels.label_after(q)
    return table


def has_classical_labeling(code: GaussCode, crossing: str) -> bool:
    """True iff the crossing's weight vanishes."""
    return algebraic_weight(code, crossing) == 0


def is_pure_virtual(code: GaussCode) -> bool:
    """True iff every crossing is odd and/or has nonzero weight."""
    ensure_valid(code)
    return all(
        parity(code, c) is Parity.ODD or algebraic_weight(code, c) != 0
        for c in code.crossings()
    )
