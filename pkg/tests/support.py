"""Shared helpers for the test suite: brute-force oracles and generators.

The oracles are written straight off the definitions with nested loops and
no shared code with the package, so agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random

from mobisim.graph import CellGraph
from mobisim.patterns import MobilityPattern, make_pattern


def brute_uncommon(a: MobilityPattern, b: MobilityPattern) -> int:
    count = 0
    for pa in a:
        if all(pa.cell != pb.cell for pb in b):
            count += 1
    for pb in b:
        if all(pb.cell != pa.cell for pa in a):
            count += 1
    return count


def brute_d_space(a: MobilityPattern, b: MobilityPattern) -> float:
    return brute_uncommon(a, b) / (len(a) + len(b))


def brute_d_time(a: MobilityPattern, b: MobilityPattern) -> float:
    total = 0.0
    k = 0
    for pa in a:
        for pb in b:
            if pa.cell == pb.cell:
                ta, tb = pa.time.index, pb.time.index
                total += abs(ta - tb) / max(ta, tb)
                k += 1
    return total / k if k else 1.0


def brute_lcss(a: MobilityPattern, b: MobilityPattern) -> int:
    """Exponential subsequence enumeration; only usable for short patterns."""
    ca, cb = a.cells, b.cells
    assert len(ca) <= 7 and len(cb) <= 7
    best = 0
    for r in range(len(ca), 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(ca, r):
            it = iter(cb)
            if all(any(x == y for y in it) for x in combo):
                best = max(best, r)
                break
    return best


def brute_cvti(a: MobilityPattern, b: MobilityPattern) -> int:
    """Overlap via explicit minute sets instead of interval arithmetic."""
    total = 0
    for pa in a:
        for pb in b:
            if pa.cell == pb.cell:
                mins_a = set(range(pa.time.start_minute, pa.time.end_minute + 1))
                mins_b = set(range(pb.time.start_minute, pb.time.end_minute + 1))
                total += len(mins_a & mins_b)
    return total


def random_connected_graph(rng: random.Random, lo: int = 6, hi: int = 30) -> CellGraph:
    """Random spanning tree plus a few extra edges."""
    n = rng.randint(lo, hi)
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for _ in range(rng.randint(0, n)):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return CellGraph(n, edges)


def random_pattern(
    rng: random.Random, n_cells: int, min_len: int = 1, max_len: int = 12
) -> MobilityPattern:
    length = rng.randint(min_len, max_len)
    slots = sorted(rng.randint(1, 11) for _ in range(length))
    return make_pattern([(rng.randrange(n_cells), t) for t in slots])


def has_repeat_at_distinct_slots(p: MobilityPattern) -> bool:
    """True when some cell is revisited at two different timestamps."""
    seen: dict[int, int] = {}
    for pt in p:
        if pt.cell in seen and seen[pt.cell] != pt.time.index:
            return True
        seen.setdefault(pt.cell, pt.time.index)
    return False
