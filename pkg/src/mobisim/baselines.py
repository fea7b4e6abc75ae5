"""Reference trajectory measures: network/time distance, OSS, LCSS, CVTI.

These are the classical measures the weighted spatial-temporal
dissimilarity is compared against. Naming follows the literature: the
network-constrained pair is exposed as tiakas_net / tiakas_time, the
origin-sequence similarity as oss, the longest common subsequence length
as lcss, and the common-visit-time interval as cvti.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .graph import CellGraph
from .measures import Weights
from .patterns import MobilityPattern


def tiakas_net(a: MobilityPattern, b: MobilityPattern, graph: CellGraph) -> float:
    """Network distance: mean per-position hop distance scaled by diameter.

    Defined only for patterns of equal length. Each position contributes 0
    when both patterns sit on the same cell, otherwise the hop distance
    between the two cells divided by the graph diameter.
    """
    if len(a) != len(b):
        raise DomainError(
            f"patterns must have equal length, got {len(a)} and {len(b)}"
        )
    dia = graph.diameter()
    terms = []
    for va, vb in zip(a.cells, b.cells):
        if va == vb:
            terms.append(0.0)
        else:
            terms.append(
                (graph.hop_distance(va, vb) + graph.hop_distance(vb, va)) / (2 * dia)
            )
    return math.fsum(terms) / len(terms)


def tiakas_time(a: MobilityPattern, b: MobilityPattern) -> float:
    """Time distance: mean normalized gap between successive-step durations.

    Compares the i-th timestamp increment of one pattern against the i-th
    of the other; a step where both increments are zero contributes zero.
    Needs equal lengths of at least two points.
    """
    if len(a) != len(b):
        raise DomainError(
            f"patterns must have equal length, got {len(a)} and {len(b)}"
        )
    if len(a) < 2:
        raise DomainError("patterns need at least two points")
    slots_a, slots_b = a.slots, b.slots
    terms = []
    for i in range(len(a) - 1):
        da = slots_a[i + 1] - slots_a[i]
        db = slots_b[i + 1] - slots_b[i]
        terms.append(0.0 if da == db == 0 else abs(da - db) / max(da, db))
    return math.fsum(terms) / len(terms)


def tiakas_total(
    a: MobilityPattern,
    b: MobilityPattern,
    graph: CellGraph,
    weights: Weights | None = None,
) -> float:
    """Weighted combination of the network and time distances."""
    w = weights if weights is not None else Weights()
    return w.space * tiakas_net(a, b, graph) + w.time * tiakas_time(a, b)


def oss_components(a: MobilityPattern, b: MobilityPattern) -> tuple[float, int]:
    """The (f, g) parts of the origin-sequence similarity.

    g counts points whose cell the other pattern never visits. f measures
    positional displacement of the shared cells: for each cell occurring in
    both patterns its occurrence positions are paired off in ascending
    order, absolute position differences are summed over all cells, and the
    total is divided by max(n, m).
    """
    cells_a, cells_b = a.cells, b.cells
    set_a, set_b = set(cells_a), set(cells_b)
    g = sum(1 for c in cells_a if c not in set_b) + sum(
        1 for c in cells_b if c not in set_a
    )

    displacement = 0
    for cell in set_a & set_b:
        pos_a = [i for i, c in enumerate(cells_a) if c == cell]
        pos_b = [i for i, c in enumerate(cells_b) if c == cell]
        displacement += sum(
            abs(i - j) for i, j in zip(pos_a, pos_b)
        )
    f = displacement / max(len(a), len(b))
    return f, g


def oss(a: MobilityPattern, b: MobilityPattern) -> float:
    """Origin-sequence dissimilarity (f + g) / (n + m)."""
    f, g = oss_components(a, b)
    return (f + g) / (len(a) + len(b))


def lcss(a: MobilityPattern, b: MobilityPattern) -> int:
    """Length of the longest common subsequence of the two cell sequences."""
    cells_a, cells_b = a.cells, b.cells
    prev = [0] * (len(cells_b) + 1)
    for ca in cells_a:
        cur = [0]
        for j, cb in enumerate(cells_b):
            cur.append(prev[j] + 1 if ca == cb else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


@dataclass(frozen=True)
class IntervalPoint:
    """A cell visit widened to the minute interval of its time slot."""

    cell: int
    start_minute: int
    end_minute: int


def interval_points(p: MobilityPattern) -> tuple[IntervalPoint, ...]:
    return tuple(
        IntervalPoint(pt.cell, pt.time.start_minute, pt.time.end_minute) for pt in p
    )


def cvti(a: MobilityPattern, b: MobilityPattern) -> int:
    """Common visit time: total minutes of slot overlap on shared cells.

    Every pair of visits to the same cell contributes the length of the
    intersection of their slot intervals, in minutes (intervals are closed,
    so two identical full slots overlap for 135 minutes). Higher means more
    similar; this is the one similarity, not dissimilarity, in the module.
    """
    total = 0
    for ia in interval_points(a):
        for ib in interval_points(b):
            if ia.cell == ib.cell:
                total += max(
                    0, min(ia.end_minute, ib.end_minute)
                    - max(ia.start_minute, ib.start_minute) + 1,
                )
    return total
