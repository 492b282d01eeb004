import random

import pytest
from hypothesis import strategies as st

from vkt.gauss import GaussCode, GaussEntry, parse_gauss


def random_code(rng: random.Random, max_crossings: int = 8,
                min_crossings: int = 0) -> GaussCode:
    """Uniform-ish valid code: random matching, passages, signs."""
    n = rng.randint(min_crossings, max_crossings)
    positions = list(range(2 * n))
    rng.shuffle(positions)
    entries = [None] * (2 * n)
    for k in range(n):
        i, j = positions[2 * k], positions[2 * k + 1]
        sign = rng.choice((1, -1))
        over_first = rng.random() < 0.5
        entries[i] = GaussEntry(str(k + 1), "O" if over_first else "U", sign)
        entries[j] = GaussEntry(str(k + 1), "U" if over_first else "O", sign)
    return GaussCode(tuple(entries))


def classical_code(rng: random.Random, max_crossings: int = 8) -> GaussCode:
    """Valid code whose chords are pairwise non-interleaving (nested)."""
    n = rng.randint(0, max_crossings)
    word = []
    open_count = 0
    placed = 0
    while placed < n or open_count:
        if placed < n and (open_count == 0 or rng.random() < 0.5):
            word.append(1)
            placed += 1
            open_count += 1
        else:
            word.append(-1)
            open_count -= 1
    stack, pairs = [], []
    for idx, step in enumerate(word):
        if step == 1:
            stack.append(idx)
        else:
            pairs.append((stack.pop(), idx))
    entries = [None] * (2 * n)
    for k, (i, j) in enumerate(pairs):
        sign = rng.choice((1, -1))
        over_first = rng.random() < 0.5
        entries[i] = GaussEntry(str(k + 1), "O" if over_first else "U", sign)
        entries[j] = GaussEntry(str(k + 1), "U" if over_first else "O", sign)
    return GaussCode(tuple(entries))


def all_codes(n_crossings: int):
    """Every valid code with exactly n_crossings crossings (fixed ids 1..n)."""
    import itertools

    def matchings(points):
        if not points:
            yield []
            return
        a = points[0]
        for i in range(1, len(points)):
            rest = points[1:i] + points[i + 1:]
            for m in matchings(rest):
                yield [(a, points[i])] + m

    for match in matchings(tuple(range(2 * n_crossings))):
        for overs in itertools.product((0, 1), repeat=n_crossings):
            for signs in itertools.product((1, -1), repeat=n_crossings):
                entries = [None] * (2 * n_crossings)
                for k, (i, j) in enumerate(match):
                    o, u = (i, j) if overs[k] == 0 else (j, i)
                    entries[o] = GaussEntry(str(k + 1), "O", signs[k])
                    entries[u] = GaussEntry(str(k + 1), "U", signs[k])
                yield GaussCode(tuple(entries))


@st.composite
def gauss_codes(draw, max_crossings: int = 6, min_crossings: int = 0):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_code(random.Random(seed), max_crossings, min_crossings)


VT2 = parse_gauss("O1+O2+U1+U2+")
VT3 = parse_gauss("O1+U2+O3-U1+O2+U3-")


@pytest.fixture
def vt2() -> GaussCode:
    return VT2


@pytest.fixture
def vt3() -> GaussCode:
    return VT3
