"""Cell adjacency graphs for a cellular coverage region.

A coverage region is modeled as an unweighted bidirected graph: vertices are
cell ids 0..n-1, and an edge means a mobile node can move between the two
cells directly. Distances are hop counts from breadth-first search.
"""

from __future__ import annotations

from importlib import resources
from typing import Iterable, Iterator

from .errors import DomainError, FormatError, GraphNotConnectedError


class CellGraph:
    """Unweighted bidirected graph over cell ids 0..vertex_count-1.

    Immutable after construction; query results are cached internally, so
    repeated distance lookups are cheap. Edges are stored both ways: adding
    (a, b) implies (b, a).
    """

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count <= 0:
            raise DomainError("graph needs at least one cell")
        self._n = vertex_count
        adjacency: list[set[int]] = [set() for _ in range(vertex_count)]
        for a, b in edges:
            self._check_cell(a)
            self._check_cell(b)
            if a == b:
                raise DomainError(f"self-loop on cell {a}")
            adjacency[a].add(b)
            adjacency[b].add(a)
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adjacency
        )
        self._bfs_cache: dict[int, list[int]] = {}
        self._diameter: int | None = None

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """All directed edges, each undirected link appearing both ways."""
        return frozenset(
            (a, b) for a in range(self._n) for b in self._adj[a]
        )

    def neighbors(self, cell: int) -> tuple[int, ...]:
        self._check_cell(cell)
        return self._adj[cell]

    def has_edge(self, a: int, b: int) -> bool:
        self._check_cell(a)
        self._check_cell(b)
        return b in self._adj[a]

    def _check_cell(self, cell: int) -> None:
        if not 0 <= cell < self._n:
            raise DomainError(
                f"cell id {cell} out of range for graph with {self._n} cells"
            )

    def _levels_from(self, source: int) -> list[int]:
        # BFS level per vertex, -1 where unreachable; cached per source.
        levels = self._bfs_cache.get(source)
        if levels is None:
            levels = [-1] * self._n
            levels[source] = 0
            frontier = [source]
            depth = 0
            while frontier:
                depth += 1
                nxt = []
                for v in frontier:
                    for w in self._adj[v]:
                        if levels[w] < 0:
                            levels[w] = depth
                            nxt.append(w)
                frontier = nxt
            self._bfs_cache[source] = levels
        return levels

    def hop_distance(self, src: int, dst: int) -> int:
        """Length of the shortest path between two cells, in hops."""
        self._check_cell(src)
        self._check_cell(dst)
        d = self._levels_from(src)[dst]
        if d < 0:
            raise GraphNotConnectedError(
                f"no path between cells {src} and {dst}"
            )
        return d

    def diameter(self) -> int:
        """Largest hop distance over all cell pairs."""
        if self._diameter is None:
            best = 0
            for v in range(self._n):
                levels = self._levels_from(v)
                worst = max(levels)
                if min(levels) < 0:
                    raise GraphNotConnectedError("graph is not connected")
                best = max(best, worst)
            self._diameter = best
        return self._diameter

    def is_connected(self) -> bool:
        return min(self._levels_from(0)) >= 0

    def __repr__(self) -> str:
        links = sum(len(a) for a in self._adj) // 2
        return f"CellGraph({self._n} cells, {links} links)"


def hop_distance(g: CellGraph, src: int, dst: int) -> int:
    return g.hop_distance(src, dst)


def diameter(g: CellGraph) -> int:
    return g.diameter()


# Offset scheme for hex_grid: cell id = row*cols + col, even rows shifted
# right by half a cell relative to odd rows.
_EVEN_ROW_SHIFTS = ((0, -1), (0, 1), (-1, 0), (-1, 1), (1, 0), (1, 1))
_ODD_ROW_SHIFTS = ((0, -1), (0, 1), (-1, -1), (-1, 0), (1, -1), (1, 0))


def hex_grid(rows: int, cols: int) -> CellGraph:
    """Connected graph of rows x cols cells tiled hexagonally.

    Interior cells have six neighbors; border cells fewer.
    """
    if rows < 1 or cols < 1:
        raise DomainError("hex_grid dimensions must be positive")
    edges = []
    for r in range(rows):
        shifts = _EVEN_ROW_SHIFTS if r % 2 == 0 else _ODD_ROW_SHIFTS
        for c in range(cols):
            here = r * cols + c
            for dr, dc in shifts:
                rr, cc = r + dr, c + dc
                if 0 <= rr < rows and 0 <= cc < cols:
                    there = rr * cols + cc
                    if here < there:
                        edges.append((here, there))
    return CellGraph(rows * cols, edges)


def parse_graph(text: str) -> CellGraph:
    """Parse the text graph format.

    Format: a `cells <N>` header line, then one `edge <a> <b>` line per
    undirected link; the reverse direction is implied. Blank lines and lines
    starting with `#` are ignored. Duplicate links (in either direction) and
    self-loops are rejected.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty graph file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "cells":
        raise FormatError(f"expected 'cells <N>' header, got {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise FormatError(f"bad cell count {header[1]!r}") from None
    if n <= 0:
        raise FormatError("cell count must be positive")

    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "edge":
            raise FormatError(f"expected 'edge <a> <b>', got {ln!r}")
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"bad edge endpoints in {ln!r}") from None
        if a == b:
            raise FormatError(f"self-loop on cell {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"edge {a} {b} outside 0..{n - 1}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise FormatError(f"duplicate edge {a} {b}")
        seen.add(key)
        edges.append((a, b))
    return CellGraph(n, edges)


def format_graph(g: CellGraph) -> str:
    """Canonical text form of a graph: sorted `edge a b` lines with a < b."""
    undirected = sorted({(min(a, b), max(a, b)) for a, b in g.edges})
    lines = [f"cells {g.vertex_count}"]
    lines += [f"edge {a} {b}" for a, b in undirected]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> CellGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: CellGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_graph(g))


_example: CellGraph | None = None


def example_graph() -> CellGraph:
    """The bundled 12-cell sample coverage region.

    A hexagonal patch with diameter 4, used by the `casestudy` command and
    handy as a small realistic fixture. Loaded once from package data.
    """
    global _example
    if _example is None:
        text = (
            resources.files("mobisim.data")
            .joinpath("example_graph.txt")
            .read_text(encoding="utf-8")
        )
        _example = parse_graph(text)
    return _example
