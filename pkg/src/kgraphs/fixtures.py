"""Named example graphs used across the tests, docs and CLI demos.

The .kg files live next to this module so they ship with the package.
Each loader returns a freshly parsed, validated graph; callers may
mutate caches freely without affecting later loads.
"""
from __future__ import annotations

from pathlib import Path

from .errors import RefError
from .skeleton import KGraph, load

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"

G_LOOP = "g_loop"  # one vertex, one loop: maximally periodic
G_O2 = "g_o2"  # one vertex, two loops: free on two generators
G_T2 = "g_t2"  # rank 2, one loop per color, the commuting torus
G_FLIP = "g_flip"  # rank 2, color-2 pair swapped by the color-1 loop
G_SRC = "g_src"  # rank 2 with a source; exercises the reduction
G_2V = "g_2v"  # rank 1, two components linked one way; not cofinal

NAMES = (G_LOOP, G_O2, G_T2, G_FLIP, G_SRC, G_2V)


def fixture_path(name: str) -> Path:
    if name not in NAMES:
        raise RefError(f"unknown fixture {name!r}; have {', '.join(NAMES)}")
    return FIXTURE_DIR / f"{name}.kg"


def fixture(name: str) -> KGraph:
    return load(fixture_path(name)).validate()


def all_fixtures() -> dict[str, KGraph]:
    return {name: fixture(name) for name in NAMES}
