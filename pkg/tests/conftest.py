"""Shared fixtures and independent brute-force oracles.

The oracles work on plain Python sets and never touch the numpy order
matrix or the closed-form rules they are compared against.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from smashframe import Frame, RingSpec
from smashframe.frame import leq


def masks(n: int):
    """Every valid idempotence mask of length n+1 (idem[0] = 1)."""
    for rest in itertools.product("01", repeat=n):
        yield "1" + "".join(rest)


def all_specs(max_n: int):
    for n in range(1, max_n + 1):
        for m in masks(n):
            yield RingSpec.from_mask(m)


@lru_cache(maxsize=None)
def frame_for(mask: str) -> Frame:
    return Frame(RingSpec.from_mask(mask))


def brute_upper_covers(elements) -> dict:
    """Transitive reduction of ``leq`` computed pair by pair."""
    above = {x: [y for y in elements if y != x and leq(x, y)] for x in elements}
    out = {}
    for x, ups in above.items():
        out[x] = {y for y in ups if not any(z != y and leq(z, y) for z in ups)}
    return out


def brute_meet_irreducibles(elements) -> set:
    covers = brute_upper_covers(elements)
    return {x for x, ups in covers.items() if len(ups) == 1}


def brute_glb(elements, x, y):
    lower = [z for z in elements if leq(z, x) and leq(z, y)]
    best = [z for z in lower if all(leq(w, z) for w in lower)]
    assert len(best) == 1
    return best[0]


def brute_lub(elements, x, y):
    upper = [z for z in elements if leq(x, z) and leq(y, z)]
    best = [z for z in upper if all(leq(z, w) for w in upper)]
    assert len(best) == 1
    return best[0]


# acceptance criteria report lines, filled by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
