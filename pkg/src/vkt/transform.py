"""Rewrites on Gauss codes: Reidemeister moves, symmetries, crossing
changes, twist replacement, twist families, and a seeded fuzz walker.

Move transcription notes
------------------------

R2: a sound oriented R2 puts one strand over the other at both new
crossings, so each of the two inserted adjacent pairs carries equal
passages (both over or both under) and the two pairs are complementary.
The two chords get opposite signs.  Patterns where a single visit mixes
an over- with an under-passage shift the weights of surrounding
crossings by +-2 and are not R2 moves; they are rejected.  ``case1``
inserts the second pair in reversed chord order (counter-oriented
strands, nested chords; after smoothing one new crossing the other is a
self-crossing); ``case2`` keeps the order (co-oriented strands,
interleaved chords; the other crossing becomes a linking crossing).

R3: a site is three chords whose six endpoints form three cyclically
adjacent position pairs, one pair per strand of the slid triangle.  The
sliding strand's pair carries equal passages.  Writing dS, dX, dY for
the three strand directions read off the within-pair orders, tau = +1
when the sliding strand goes under (else -1), and chi = +1 when the
third chord's passage on strand X is over (else -1), planar
realizability of the triangle forces

    sign(A) = tau*dS*dX,  sign(B) = tau*dS*dY,  sign(C) = chi*dX*dY,

where A/B are the sliding strand's crossings with X/Y and C is the X-Y
crossing.  Applying the move swaps the two entries of each pair in
place; it is an involution on the same position triple.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .gauss import (
    OVER,
    UNDER,
    GaussCode,
    GaussEntry,
    GaussError,
    UnknownCrossingError,
    ensure_valid,
    flip_passage,
)

__all__ = [
    "MoveKind",
    "RandomWalkConfig",
    "WalkResult",
    "R3Site",
    "r1_insert",
    "r1_delete",
    "r1_delete_candidates",
    "r2_insert",
    "r2_delete",
    "r2_delete_candidates",
    "r2_patterns",
    "r3_sites",
    "r3_apply",
    "mirror",
    "reverse",
    "connected_sum",
    "crossing_change",
    "twist_replace",
    "family",
    "random_move_walk",
    "replay",
    "simplify_greedy",
    "fresh_names",
]


class MoveKind(Enum):
    R1_INSERT = "r1-insert"
    R1_DELETE = "r1-delete"
    R2_INSERT = "r2-insert"
    R2_DELETE = "r2-delete"
    R3 = "r3"


def fresh_names(code: GaussCode, count: int, prefix: str = "x") -> tuple[str, ...]:
    """Crossing ids of the form prefix+integer not yet used in the code."""
    used = set(code.crossings())
    names = []
    i = 1
    while len(names) < count:
        name = f"{prefix}{i}"
        if name not in used:
            names.append(name)
            used.add(name)
        i += 1
    return tuple(names)


def _default_name(code: GaussCode) -> str:
    """Smallest unused positive integer as a bare numeric id."""
    used = set(code.crossings())
    i = 1
    while str(i) in used:
        i += 1
    return str(i)


# ---------------------------------------------------------------------------
# R1


def r1_insert(code: GaussCode, position: int, sign: int,
              passage_order: str = "OU", name: str | None = None) -> GaussCode:
    """Insert a kink: a fresh crossing's two entries, adjacent at `position`."""
    ensure_valid(code)
    if not 0 <= position <= len(code):
        raise GaussError(f"insert position {position} out of range")
    if passage_order not in ("OU", "UO"):
        raise GaussError(f"passage order must be 'OU' or 'UO', got {passage_order!r}")
    if name is None:
        name = _default_name(code)
    pair = tuple(GaussEntry(name, p, sign) for p in passage_order)
    entries = code.entries[:position] + pair + code.entries[position:]
    return GaussCode(entries)


def r1_delete_candidates(code: GaussCode) -> tuple[str, ...]:
    """Crossings whose two occurrences are cyclically adjacent."""
    n = len(code)
    out = []
    for c in code.crossings():
        p, q = code.positions(c)
        if q - p == 1 or (p == 0 and q == n - 1):
            out.append(c)
    return tuple(out)


def r1_delete(code: GaussCode, crossing: str) -> GaussCode:
    """Remove a kink; the crossing's occurrences must be cyclically adjacent."""
    ensure_valid(code)
    p, q = code.positions(crossing)
    n = len(code)
    if not (q - p == 1 or (p == 0 and q == n - 1)):
        raise GaussError(f"crossing {crossing!r} is not a kink (occurrences not adjacent)")
    entries = tuple(e for i, e in enumerate(code.entries) if i not in (p, q))
    return GaussCode(entries)


# ---------------------------------------------------------------------------
# R2

_R2_PATTERNS = ("case1-over", "case1-under", "case2-over", "case2-under")


def r2_patterns() -> tuple[str, ...]:
    return _R2_PATTERNS


def r2_insert(code: GaussCode, pos_a: int, pos_b: int, sign_first: int = 1,
              pattern: str = "case1-over",
              names: tuple[str, str] | None = None) -> GaussCode:
    """Insert two opposite-sign crossings forming an R2 bigon.

    pos_a <= pos_b are arc indices of the two strand visits.  The first
    chord takes sign_first, the second its negation.
    """
    ensure_valid(code)
    if not 0 <= pos_a <= pos_b <= len(code):
        raise GaussError(f"bad R2 arc positions ({pos_a}, {pos_b})")
    if pattern not in _R2_PATTERNS:
        raise GaussError(f"unknown R2 pattern {pattern!r}")
    if names is None:
        n1 = _default_name(code)
        n2 = _default_name(GaussCode(code.entries + (GaussEntry(n1, OVER, 1),)))
    else:
        n1, n2 = names
    top = OVER if pattern.endswith("over") else UNDER
    bot = flip_passage(top)
    pair_a = (GaussEntry(n1, top, sign_first), GaussEntry(n2, top, -sign_first))
    if pattern.startswith("case1"):
        pair_b = (GaussEntry(n2, bot, -sign_first), GaussEntry(n1, bot, sign_first))
    else:
        pair_b = (GaussEntry(n1, bot, sign_first), GaussEntry(n2, bot, -sign_first))
    entries = (
        code.entries[:pos_a]
        + pair_a
        + code.entries[pos_a:pos_b]
        + pair_b
        + code.entries[pos_b:]
    )
    return GaussCode(entries)


def _adjacent(p: int, q: int, n: int) -> bool:
    return (q - p) % n == 1 or (p - q) % n == 1


def _r2_pair_matches(code: GaussCode, c1: str, c2: str) -> bool:
    n = len(code)
    a1, a2 = code.positions(c1)
    b1, b2 = code.positions(c2)
    if code.sign_of(c1) != -code.sign_of(c2):
        return False
    for x1, x2 in ((a1, a2), (a2, a1)):
        for y1, y2 in ((b1, b2), (b2, b1)):
            if not (_adjacent(x1, y1, n) and _adjacent(x2, y2, n)):
                continue
            p1 = {code.entries[x1].passage, code.entries[y1].passage}
            p2 = {code.entries[x2].passage, code.entries[y2].passage}
            if len(p1) == 1 and len(p2) == 1 and p1 != p2:
                return True
    return False


def r2_delete_candidates(code: GaussCode) -> tuple[tuple[str, str], ...]:
    ids = code.crossings()
    out = []
    for i, c1 in enumerate(ids):
        for c2 in ids[i + 1:]:
            if _r2_pair_matches(code, c1, c2):
                out.append((c1, c2))
    return tuple(out)


def r2_delete(code: GaussCode, c1: str, c2: str) -> GaussCode:
    """Remove an R2 bigon; raises when the two chords do not form one."""
    ensure_valid(code)
    if not _r2_pair_matches(code, c1, c2):
        raise GaussError(f"crossings {c1!r}, {c2!r} do not form an R2 bigon")
    drop = set(code.positions(c1)) | set(code.positions(c2))
    return GaussCode(tuple(e for i, e in enumerate(code.entries) if i not in drop))


# ---------------------------------------------------------------------------
# R3


@dataclass(frozen=True, order=True)
class R3Site:
    """Starting positions of the three adjacent endpoint pairs."""

    pair_starts: tuple[int, int, int]


def _r3_assignment_ok(code: GaussCode, p1: int, others: dict[str, int],
                      third: str) -> bool:
    """Check the sign constraints for pair p1 as the sliding strand."""
    n = len(code)
    eu = code.entries[p1]
    ev = code.entries[(p1 + 1) % n]
    if eu.passage != ev.passage:
        return False
    tau = 1 if eu.passage == UNDER else -1
    chord_u, chord_v = eu.crossing, ev.crossing
    for a_chord, b_chord, d_s in ((chord_u, chord_v, 1), (chord_v, chord_u, -1)):
        qa = others.get(a_chord)
        qb = others.get(b_chord)
        if qa is None or qb is None:
            continue
        ea_first = code.entries[qa]
        ea_second = code.entries[(qa + 1) % n]
        if {ea_first.crossing, ea_second.crossing} != {a_chord, third}:
            continue
        eb_first = code.entries[qb]
        eb_second = code.entries[(qb + 1) % n]
        if {eb_first.crossing, eb_second.crossing} != {b_chord, third}:
            continue
        d_x = 1 if ea_first.crossing == third else -1
        d_y = 1 if eb_first.crossing == third else -1
        c_on_x = ea_first if ea_first.crossing == third else ea_second
        chi = 1 if c_on_x.passage == OVER else -1
        sign_a = code.sign_of(a_chord)
        sign_b = code.sign_of(b_chord)
        sign_c = code.sign_of(third)
        if (sign_a == tau * d_s * d_x and sign_b == tau * d_s * d_y
                and sign_c == chi * d_x * d_y):
            return True
    return False


def _r3_site_matches(code: GaussCode, starts: tuple[int, int, int]) -> bool:
    n = len(code)
    positions = []
    for s in starts:
        positions.extend([s % n, (s + 1) % n])
    if len(set(positions)) != 6:
        return False
    chords = {code.entries[p].crossing for p in positions}
    if len(chords) != 3:
        return False
    pair_chords = []
    for s in starts:
        a = code.entries[s % n].crossing
        b = code.entries[(s + 1) % n].crossing
        if a == b:
            return False
        pair_chords.append(frozenset((a, b)))
    if len(set(pair_chords)) != 3:
        return False
    for idx, s in enumerate(starts):
        others = {}
        for jdx, s2 in enumerate(starts):
            if jdx == idx:
                continue
            for c in pair_chords[jdx]:
                if c in pair_chords[idx]:
                    others[c] = s2 % n
        third = next(iter(chords - pair_chords[idx]))
        if _r3_assignment_ok(code, s % n, others, third):
            return True
    return False


def r3_sites(code: GaussCode) -> tuple[R3Site, ...]:
    """All position triples where an oriented triangle slide applies."""
    ensure_valid(code)
    n = len(code)
    if n < 6:
        return ()
    adj: dict[frozenset, list[int]] = {}
    for i in range(n):
        a = code.entries[i].crossing
        b = code.entries[(i + 1) % n].crossing
        if a != b:
            adj.setdefault(frozenset((a, b)), []).append(i)
    sites = []
    keys = sorted(adj, key=sorted)
    for i, k1 in enumerate(keys):
        for k2 in keys[i + 1:]:
            if len(k1 & k2) != 1:
                continue
            k3 = k1 ^ k2
            if k3 not in adj:
                continue
            if sorted(k3) <= sorted(k2):
                continue
            for s1 in adj[k1]:
                for s2 in adj[k2]:
                    for s3 in adj[k3]:
                        starts = tuple(sorted((s1, s2, s3)))
                        if _r3_site_matches(code, starts):
                            sites.append(R3Site(starts))
    return tuple(sorted(set(sites)))


def r3_apply(code: GaussCode, site: R3Site) -> GaussCode:
    """Slide the triangle: swap the two entries of each adjacent pair."""
    ensure_valid(code)
    if not _r3_site_matches(code, site.pair_starts):
        raise GaussError(f"no R3 pattern at pairs {site.pair_starts}")
    n = len(code)
    entries = list(code.entries)
    for s in site.pair_starts:
        i, j = s % n, (s + 1) % n
        entries[i], entries[j] = entries[j], entries[i]
    return GaussCode(tuple(entries))


# ---------------------------------------------------------------------------
# Symmetries and crossing surgery


def mirror(code: GaussCode) -> GaussCode:
    """Switch every crossing: complement passages, negate signs."""
    return GaussCode(
        tuple(GaussEntry(e.crossing, flip_passage(e.passage), -e.sign)
              for e in code.entries)
    )


def reverse(code: GaussCode) -> GaussCode:
    """Reverse the traversal direction: reverse the entry sequence."""
    return GaussCode(tuple(reversed(code.entries)))


def connected_sum(a: GaussCode, b: GaussCode, cut_a: int = 0,
                  cut_b: int = 0) -> GaussCode:
    """Splice b (opened at cut_b) into a at cut_a, renaming b's crossings
    to avoid collisions."""
    ensure_valid(a)
    ensure_valid(b)
    if not 0 <= cut_a <= len(a) or not 0 <= cut_b <= len(b):
        raise GaussError("cut position out of range")
    rename = dict(zip(b.crossings(), fresh_names(a, len(b.crossings()), prefix="s")))
    b_entries = tuple(
        GaussEntry(rename[e.crossing], e.passage, e.sign)
        for e in b.entries[cut_b:] + b.entries[:cut_b]
    )
    return GaussCode(a.entries[:cut_a] + b_entries + a.entries[cut_a:])


def crossing_change(code: GaussCode, crossing: str) -> GaussCode:
    """Switch one crossing: both occurrences flip passage and negate sign."""
    positions = set(code.positions(crossing))
    return GaussCode(
        tuple(
            GaussEntry(e.crossing, flip_passage(e.passage), -e.sign)
            if i in positions else e
            for i, e in enumerate(code.entries)
        )
    )


def _twist_with_names(code: GaussCode, crossing: str) -> tuple[GaussCode, tuple[str, str, str]]:
    ensure_valid(code)
    p, q = code.positions(crossing)
    sign = code.sign_of(crossing)
    pas = code.entries[p].passage
    n1, n2, n3 = fresh_names(code, 3)
    at_p = (
        GaussEntry(n1, pas, sign),
        GaussEntry(n2, flip_passage(pas), sign),
        GaussEntry(n3, pas, sign),
    )
    at_q = (
        GaussEntry(n3, flip_passage(pas), sign),
        GaussEntry(n2, pas, sign),
        GaussEntry(n1, flip_passage(pas), sign),
    )
    entries = list(code.entries)
    entries[q:q + 1] = at_q
    entries[p:p + 1] = at_p
    return GaussCode(tuple(entries)), (n1, n2, n3)


def twist_replace(code: GaussCode, crossing: str) -> GaussCode:
    """Replace one crossing by three same-sign twist crossings.

    The three new chords are mutually non-interleaving with weights
    (W, -W, W) where W was the old crossing's weight; every other
    crossing's weight is unchanged, so the polynomial changes by
    sign * (t^W + t^-W - 2).
    """
    return _twist_with_names(code, crossing)[0]


def family(base: str, n: int) -> GaussCode:
    """Iterated twist replacement at the designated crossing of a fixture.

    Odd-family bases (K1, MK1) take odd n >= 1; even-family bases
    (K2, MK2) take even n >= 2.  Each twist adds two to n.
    """
    from .fixtures import DESIGNATED_TWIST, load_fixture

    if base not in DESIGNATED_TWIST:
        raise GaussError(f"unknown family base {base!r}")
    code = load_fixture(base)
    start_n = 1 if base in ("K1", "MK1") else 2
    if n < start_n or (n - start_n) % 2 != 0:
        raise GaussError(
            f"family {base} needs n >= {start_n} with n = {start_n} (mod 2)"
        )
    designated = DESIGNATED_TWIST[base]
    for _ in range((n - start_n) // 2):
        code, (first, _, _) = _twist_with_names(code, designated)
        designated = first
    return code


# ---------------------------------------------------------------------------
# Greedy simplification and the fuzz walker


def simplify_greedy(code: GaussCode) -> GaussCode:
    """Apply R1/R2 deletions until none applies."""
    while True:
        kinks = r1_delete_candidates(code)
        if kinks:
            code = r1_delete(code, kinks[0])
            continue
        bigons = r2_delete_candidates(code)
        if bigons:
            code = r2_delete(code, *bigons[0])
            continue
        return code


@dataclass(frozen=True)
class RandomWalkConfig:
    steps: int
    seed: int
    move_mix: Mapping[MoveKind, float] | None = None
    max_crossings: int = 24


@dataclass(frozen=True)
class WalkResult:
    code: GaussCode
    log: tuple[str, ...]
    stopped_early: bool = False


_DEFAULT_MIX = {
    MoveKind.R1_INSERT: 2.0,
    MoveKind.R1_DELETE: 2.0,
    MoveKind.R2_INSERT: 2.0,
    MoveKind.R2_DELETE: 2.0,
    MoveKind.R3: 3.0,
}


def _sign_text(s: int) -> str:
    return "+1" if s > 0 else "-1"


def random_move_walk(code: GaussCode, config: RandomWalkConfig) -> WalkResult:
    """Apply `steps` randomly drawn applicable moves, deterministically in
    (code, seed); returns the final code and a replayable log."""
    ensure_valid(code)
    mix = dict(config.move_mix) if config.move_mix else dict(_DEFAULT_MIX)
    if any(w < 0 for w in mix.values()) or not any(w > 0 for w in mix.values()):
        raise GaussError("move mix weights must be nonnegative and not all zero")
    rng = random.Random(config.seed)
    log: list[str] = []
    stopped = False
    for _ in range(config.steps):
        n_cross = len(code.crossings())
        # insertions taper off as the crossing cap approaches
        fill = n_cross / config.max_crossings if config.max_crossings else 1.0
        kinks = r1_delete_candidates(code)
        bigons = r2_delete_candidates(code)
        sites = r3_sites(code)
        options: list[tuple[MoveKind, float]] = []
        if n_cross + 1 <= config.max_crossings and mix.get(MoveKind.R1_INSERT, 0) > 0:
            options.append((MoveKind.R1_INSERT, mix[MoveKind.R1_INSERT] * (1.0 - 0.9 * fill)))
        if n_cross + 2 <= config.max_crossings and mix.get(MoveKind.R2_INSERT, 0) > 0:
            options.append((MoveKind.R2_INSERT, mix[MoveKind.R2_INSERT] * (1.0 - 0.9 * fill)))
        if kinks and mix.get(MoveKind.R1_DELETE, 0) > 0:
            options.append((MoveKind.R1_DELETE, mix[MoveKind.R1_DELETE] * (0.2 + fill)))
        if bigons and mix.get(MoveKind.R2_DELETE, 0) > 0:
            options.append((MoveKind.R2_DELETE, mix[MoveKind.R2_DELETE] * (0.2 + fill)))
        if sites and mix.get(MoveKind.R3, 0) > 0:
            options.append((MoveKind.R3, mix[MoveKind.R3]))
        options = [(k, w) for k, w in options if w > 0]
        if not options:
            log.append("stop reason=no-applicable-move")
            stopped = True
            break
        kinds = [k for k, _ in options]
        weights = [w for _, w in options]
        kind = rng.choices(kinds, weights=weights, k=1)[0]
        if kind is MoveKind.R1_INSERT:
            pos = rng.randint(0, len(code))
            sign = rng.choice((1, -1))
            order = rng.choice(("OU", "UO"))
            name = _default_name(code)
            code = r1_insert(code, pos, sign, order, name=name)
            log.append(f"r1-insert pos={pos} sign={_sign_text(sign)} order={order} name={name}")
        elif kind is MoveKind.R1_DELETE:
            c = rng.choice(kinks)
            code = r1_delete(code, c)
            log.append(f"r1-delete crossing={c}")
        elif kind is MoveKind.R2_INSERT:
            pos_a = rng.randint(0, len(code))
            pos_b = rng.randint(pos_a, len(code))
            sign = rng.choice((1, -1))
            pattern = rng.choice(_R2_PATTERNS)
            n1 = _default_name(code)
            n2 = _default_name(GaussCode(code.entries + (GaussEntry(n1, OVER, 1),)))
            code = r2_insert(code, pos_a, pos_b, sign, pattern, names=(n1, n2))
            log.append(
                f"r2-insert pos_a={pos_a} pos_b={pos_b} sign={_sign_text(sign)}"
                f" pattern={pattern} names={n1},{n2}"
            )
        elif kind is MoveKind.R2_DELETE:
            c1, c2 = rng.choice(bigons)
            code = r2_delete(code, c1, c2)
            log.append(f"r2-delete c1={c1} c2={c2}")
        else:
            site = rng.choice(sites)
            code = r3_apply(code, site)
            log.append("r3 pairs=" + ",".join(str(s) for s in site.pair_starts))
        ensure_valid(code)
    return WalkResult(code, tuple(log), stopped)


def replay(code: GaussCode, log: tuple[str, ...] | list[str]) -> GaussCode:
    """Re-apply a walk log to a starting code."""
    for line in log:
        line = line.strip()
        if not line or line.startswith("stop "):
            continue
        kind, _, rest = line.partition(" ")
        args = dict(part.split("=", 1) for part in rest.split() if "=" in part)
        if kind == "r1-insert":
            code = r1_insert(code, int(args["pos"]), int(args["sign"]),
                             args["order"], name=args["name"])
        elif kind == "r1-delete":
            code = r1_delete(code, args["crossing"])
        elif kind == "r2-insert":
            n1, n2 = args["names"].split(",")
            code = r2_insert(code, int(args["pos_a"]), int(args["pos_b"]),
                             int(args["sign"]), args["pattern"], names=(n1, n2))
        elif kind == "r2-delete":
            code = r2_delete(code, args["c1"], args["c2"])
        elif kind == "r3":
            starts = tuple(int(s) for s in args["pairs"].split(","))
            code = r3_apply(code, R3Site(starts))
        else:
            raise GaussError(f"unknown move log line: {line!r}")
    return code
