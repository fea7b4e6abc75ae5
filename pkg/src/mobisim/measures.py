"""Weighted spatial-temporal dissimilarity between mobility patterns.

All three functions return 0 for "as similar as possible" and 1 for "as
different as possible". The spatial part counts cells of one pattern that
the other never visits; the temporal part averages normalized timestamp
gaps over every index pair that lands on a common cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .patterns import MobilityPattern


@dataclass(frozen=True)
class Weights:
    """Convex weighting of the spatial and temporal parts."""

    space: float = 0.5
    time: float = 0.5

    def __post_init__(self) -> None:
        if self.space < 0 or self.time < 0:
            raise DomainError(f"weights must be non-negative, got {self}")
        if abs(self.space + self.time - 1.0) > 1e-12:
            raise DomainError(f"weights must sum to 1, got {self}")


def uncommon_cell_count(a: MobilityPattern, b: MobilityPattern) -> int:
    """Number of points whose cell does not occur anywhere in the other pattern.

    Counted in both directions: points of a with a cell absent from b, plus
    points of b with a cell absent from a. Repeated visits count once each.
    """
    cells_a = set(a.cells)
    cells_b = set(b.cells)
    return sum(1 for c in a.cells if c not in cells_b) + sum(
        1 for c in b.cells if c not in cells_a
    )


def spatial_dissimilarity(a: MobilityPattern, b: MobilityPattern) -> float:
    """Share of points sitting on cells the other pattern never visits."""
    return uncommon_cell_count(a, b) / (len(a) + len(b))


def temporal_dissimilarity(a: MobilityPattern, b: MobilityPattern) -> float:
    """Mean normalized timestamp gap over all cross-pattern matches.

    Every index pair (i, j) with the same cell contributes
    |ta_i - tb_j| / max(ta_i, tb_j); the mean is over the number of such
    pairs. With no common cell there is nothing to compare and the
    patterns count as temporally maximally apart: the result is 1.
    """
    terms = []
    for ca, ta in zip(a.cells, a.slots):
        for cb, tb in zip(b.cells, b.slots):
            if ca == cb:
                terms.append(abs(ta - tb) / max(ta, tb))
    if not terms:
        return 1.0
    # fsum keeps the sum independent of term order, so swapping the
    # arguments yields the bit-identical result.
    return math.fsum(terms) / len(terms)


def weighted_dissimilarity(
    a: MobilityPattern, b: MobilityPattern, weights: Weights | None = None
) -> float:
    """Convex combination of the spatial and temporal dissimilarities."""
    w = weights if weights is not None else Weights()
    return w.space * spatial_dissimilarity(a, b) + w.time * temporal_dissimilarity(a, b)
