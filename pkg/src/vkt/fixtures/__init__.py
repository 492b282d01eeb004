"""Named fixture knots and links shipped with the package.

Knot fixtures are text Gauss codes (one per .gauss file, '#' comments
allowed); link fixtures are JSON two-component links.  The environment
variable VKT_FIXTURES overrides the fixture directory.
"""

from __future__ import annotations

import os
from pathlib import Path

from ..gauss import GaussCode, GaussError, parse_gauss
from ..linkdiag import TwoComponentLink
from ..mutation import BlockPair

__all__ = [
    "KNOT_FIXTURES",
    "LINK_FIXTURES",
    "DESIGNATED_TWIST",
    "DESIGNATED_BLOCKS",
    "fixture_dir",
    "load_fixture",
    "load_link_fixture",
]

KNOT_FIXTURES = {
    "VT2": "vt2.gauss",
    "VT3": "vt3.gauss",
    "F8": "figure_eight.gauss",
    "K1": "k1.gauss",
    "MK1": "mk1.gauss",
    "K2": "k2.gauss",
    "MK2": "mk2.gauss",
}

LINK_FIXTURES = {
    "HOPF": "virtual_hopf.json",
    "L4": "four_crossing_link.json",
}

# Twist-family seeds: the crossing where twist replacement is iterated.
DESIGNATED_TWIST = {"K1": "C1", "MK1": "C1", "K2": "C2", "MK2": "C2"}

# Mutation tangles as zero-based inclusive cyclic ranges.
DESIGNATED_BLOCKS: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "K1": ((0, 2), (5, 7)),
    "MK1": ((0, 2), (5, 7)),
    "K2": ((4, 6), (8, 10)),
    "MK2": ((4, 6), (8, 10)),
}


def fixture_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get("VKT_FIXTURES")
    if env:
        return Path(env)
    return Path(__file__).parent


def load_fixture(name: str, directory: str | os.PathLike | None = None) -> GaussCode:
    key = name.upper()
    if key not in KNOT_FIXTURES:
        raise GaussError(f"unknown knot fixture {name!r}; have {sorted(KNOT_FIXTURES)}")
    path = fixture_dir(directory) / KNOT_FIXTURES[key]
    text = "\n".join(
        line for line in path.read_text().splitlines()
        if not line.strip().startswith("#")
    )
    return parse_gauss(text)


def load_link_fixture(name: str, directory: str | os.PathLike | None = None) -> TwoComponentLink:
    key = name.upper()
    if key not in LINK_FIXTURES:
        raise GaussError(f"unknown link fixture {name!r}; have {sorted(LINK_FIXTURES)}")
    path = fixture_dir(directory) / LINK_FIXTURES[key]
    return TwoComponentLink.from_json(path.read_text())


def designated_blocks(name: str, code: GaussCode) -> BlockPair:
    key = name.upper()
    if key not in DESIGNATED_BLOCKS:
        raise GaussError(f"fixture {name!r} has no designated block pair")
    first, second = DESIGNATED_BLOCKS[key]
    return BlockPair.from_inclusive(first, second, len(code))
