"""Discretized timestamps, points, and mobility patterns.

A day is split into eleven 135-minute slots t1..t11 (the last slot is cut
short by midnight and spans 90 minutes). All timestamp arithmetic in the
measures uses the ordinal slot index, so t3 - t1 = 2 and max(t3, t1) = 3.

A mobility pattern is a non-empty sequence of (cell, timestamp) points with
non-decreasing timestamps. Cells may repeat; equality of points is pairwise
equality of cell and timestamp.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, FormatError

SLOT_MINUTES = 135
SLOT_COUNT = 11
DAY_MINUTES = 1440


@dataclass(frozen=True, order=True)
class Timestamp:
    """Ordinal time-of-day slot, index 1..11."""

    index: int

    def __post_init__(self) -> None:
        if not 1 <= self.index <= SLOT_COUNT:
            raise DomainError(f"timestamp index {self.index} outside 1..{SLOT_COUNT}")

    @property
    def start_minute(self) -> int:
        return SLOT_MINUTES * (self.index - 1)

    @property
    def end_minute(self) -> int:
        # Slot 11 would run past midnight; it is truncated to 23:59.
        return min(SLOT_MINUTES * self.index, DAY_MINUTES) - 1

    @property
    def span_minutes(self) -> int:
        return self.end_minute - self.start_minute + 1

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return f"t{self.index}"


TIMESTAMPS: tuple[Timestamp, ...] = tuple(Timestamp(k) for k in range(1, SLOT_COUNT + 1))


def timestamp_of_minute(minute: int) -> Timestamp:
    """The slot whose interval contains the given minute of the day."""
    if not 0 <= minute < DAY_MINUTES:
        raise DomainError(f"minute {minute} outside 0..{DAY_MINUTES - 1}")
    return TIMESTAMPS[minute // SLOT_MINUTES]


@dataclass(frozen=True)
class Point:
    """A cell visited at a timestamp."""

    cell: int
    time: Timestamp

    def __post_init__(self) -> None:
        if self.cell < 0:
            raise DomainError(f"cell id must be non-negative, got {self.cell}")

    def __repr__(self) -> str:
        return f"({self.cell},{self.time!r})"


class MobilityPattern:
    """Ordered non-empty sequence of points with non-decreasing timestamps.

    With strict=True, at most two consecutive points may share a timestamp;
    by default any non-decreasing run is accepted.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[Point], strict: bool = False):
        pts = tuple(points)
        if not pts:
            raise DomainError("a pattern needs at least one point")
        for prev, cur in zip(pts, pts[1:]):
            if cur.time < prev.time:
                raise DomainError(
                    f"timestamps must be non-decreasing ({prev!r} then {cur!r})"
                )
        if strict:
            for a, b, c in zip(pts, pts[1:], pts[2:]):
                if a.time == b.time == c.time:
                    raise DomainError(
                        f"more than two consecutive points share {a.time!r}"
                    )
        self._points = pts

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    @property
    def cells(self) -> tuple[int, ...]:
        return tuple(p.cell for p in self._points)

    @property
    def slots(self) -> tuple[int, ...]:
        """Ordinal timestamp indices, in sequence order."""
        return tuple(p.time.index for p in self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __getitem__(self, i: int) -> Point:
        return self._points[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MobilityPattern):
            return NotImplemented
        return self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        inner = " ".join(repr(p) for p in self._points)
        return f"<pattern {inner}>"


def make_pattern(
    pairs: Sequence[tuple[int, int]], strict: bool = False
) -> MobilityPattern:
    """Build a validated pattern from (cell id, timestamp index) pairs."""
    return MobilityPattern(
        (Point(cell, Timestamp(t)) for cell, t in pairs), strict=strict
    )


def is_subpattern(b: MobilityPattern, a: MobilityPattern) -> bool:
    """True iff b's points appear in a, in order (same cell AND timestamp)."""
    it = iter(a)
    return all(any(pb == pa for pa in it) for pb in b)


TRACE_HEADER = "pattern_id,seq,cell,timestamp_index"


def parse_trace(text: str) -> dict[str, MobilityPattern]:
    """Parse a trace file into patterns keyed by pattern id.

    Format is comma-separated with header `pattern_id,seq,cell,timestamp_index`,
    rows sorted by (pattern_id, seq). Rows of one pattern must be contiguous
    with strictly increasing seq; pattern ids must be in ascending order.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != TRACE_HEADER:
        raise FormatError(f"expected header {TRACE_HEADER!r}")

    groups: dict[str, list[tuple[int, int, int]]] = {}
    last_id: str | None = None
    for lineno, ln in enumerate(lines[1:], start=2):
        if not ln.strip():
            continue
        parts = ln.split(",")
        if len(parts) != 4:
            raise FormatError(f"line {lineno}: expected 4 fields, got {len(parts)}")
        pid = parts[0].strip()
        if not pid:
            raise FormatError(f"line {lineno}: empty pattern id")
        try:
            seq, cell, slot = (int(p) for p in parts[1:])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field") from None
        if pid != last_id:
            if pid in groups:
                raise FormatError(
                    f"line {lineno}: rows for pattern {pid!r} are not contiguous"
                )
            if last_id is not None and pid < last_id:
                raise FormatError(
                    f"line {lineno}: pattern ids out of order ({pid!r} after {last_id!r})"
                )
            groups[pid] = []
            last_id = pid
        rows = groups[pid]
        if rows and seq <= rows[-1][0]:
            raise FormatError(
                f"line {lineno}: seq not increasing within pattern {pid!r}"
            )
        rows.append((seq, cell, slot))

    patterns: dict[str, MobilityPattern] = {}
    for pid, rows in groups.items():
        try:
            patterns[pid] = make_pattern([(cell, slot) for _, cell, slot in rows])
        except DomainError as exc:
            raise FormatError(f"pattern {pid!r}: {exc}") from None
    return patterns


def format_trace(patterns: dict[str, MobilityPattern]) -> str:
    lines = [TRACE_HEADER]
    for pid, pattern in patterns.items():
        for seq, p in enumerate(pattern):
            lines.append(f"{pid},{seq},{p.cell},{p.time.index}")
    return "\n".join(lines) + "\n"


def load_trace(path: str) -> dict[str, MobilityPattern]:
    with open(path, encoding="utf-8") as fh:
        return parse_trace(fh.read())


def save_trace(patterns: dict[str, MobilityPattern], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_trace(patterns))
