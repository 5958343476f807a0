"""Vertex-colored graphs with hop-distance consistency checkers.

A colored graph is a simple undirected graph on vertices ``1..n`` where
every vertex carries a color id in ``1..c``.  For a nonempty subset ``S``
of vertices, the *nearest neighbors* of ``v`` in ``S`` are the members of
``S`` at minimum hop distance from ``v``.  ``S`` is

* **consistent** when every vertex has at least one nearest neighbor in
  ``S`` of its own color, and
* **strict consistent** when *all* nearest neighbors in ``S`` share the
  vertex's color.

Strict consistency implies consistency, and every strict consistent subset
meets every *block* (maximal connected monochromatic vertex set), which is
what :func:`blocks` computes.

Two line-oriented ASCII file formats are handled here (see the README for
the full grammar):

* CCG instances -- ``c`` comment lines, one ``p ccg <n> <m> <colors>``
  header, ``n`` color lines ``v <id> <color>`` and ``m`` edge lines
  ``e <u> <w>``;
* subsets -- a single line ``s <id> <id> ...`` with strictly increasing
  vertex ids.

Parse failures raise :class:`ParseError` naming the offending 1-based line.
Operations whose documented preconditions are violated (disconnected
input, empty subsets, enumeration caps...) raise :class:`PreconditionError`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

UNREACHABLE = math.inf

# Graphs up to this many vertices get a cached all-pairs BFS table and
# per-vertex distance buckets; larger graphs fall back to per-query BFS so
# memory stays linear in the graph size.
_APSP_THRESHOLD = 2048


class ParseError(ValueError):
    """A malformed instance or subset file; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class PreconditionError(ValueError):
    """An operation was invoked outside its documented precondition."""


class ColoredGraph:
    """Immutable simple undirected graph with a total vertex coloring.

    ``color`` is a tuple indexed by vertex id (index 0 is padding), each
    entry in ``1..c``.  Edges are stored as a frozenset of ``(u, w)`` pairs
    with ``u < w``.  Derived data (adjacency, distances, blocks) is
    computed lazily and cached; the identity fields never change after
    construction.
    """

    __slots__ = ("n", "c", "edges", "color",
                 "_adj", "_rows", "_buckets", "_connected", "_blocks")

    def __init__(self, n: int, c: int,
                 edges: Iterable[tuple[int, int]], color) -> None:
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        if c < 1:
            raise ValueError("color count must be at least 1")
        normalized = set()
        for u, w in edges:
            if not (1 <= u <= n and 1 <= w <= n):
                raise ValueError(f"edge ({u},{w}) has an endpoint outside 1..{n}")
            if u == w:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((u, w) if u < w else (w, u))
        if isinstance(color, Mapping):
            missing = [v for v in range(1, n + 1) if v not in color]
            if missing:
                raise ValueError(f"missing color for vertex {missing[0]}")
            seq = [color[v] for v in range(1, n + 1)]
        else:
            seq = list(color)
            if len(seq) != n:
                raise ValueError(f"expected {n} colors, got {len(seq)}")
        for v, col in enumerate(seq, start=1):
            if not (1 <= col <= c):
                raise ValueError(f"vertex {v} has color {col} outside 1..{c}")
        self.n = n
        self.c = c
        self.edges = frozenset(normalized)
        self.color = (0, *seq)
        self._adj = None
        self._rows = None
        self._buckets = None
        self._connected = None
        self._blocks = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, indexed by vertex id."""
        adj = self._adj
        if adj is None:
            lists: list[list[int]] = [[] for _ in range(self.n + 1)]
            for u, w in self.edges:
                lists[u].append(w)
                lists[w].append(u)
            adj = self._adj = tuple(tuple(sorted(nbrs)) for nbrs in lists)
        return adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def hops_from(self, source: int) -> list:
        """BFS hop distances from ``source``; ``UNREACHABLE`` where no path."""
        adj = self.adjacency
        dist: list = [None] * (self.n + 1)
        dist[source] = 0
        queue = deque((source,))
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in adj[u]:
                if dist[w] is None:
                    dist[w] = du
                    queue.append(w)
        return [UNREACHABLE if d is None else d for d in dist]

    @property
    def is_connected(self) -> bool:
        if self._connected is None:
            row = self.hops_from(1)
            self._connected = all(row[v] != UNREACHABLE
                                  for v in range(1, self.n + 1))
        return self._connected

    @property
    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected

    def _distance_rows(self) -> list:
        rows = self._rows
        if rows is None:
            rows = self._rows = [()] + [self.hops_from(v)
                                        for v in range(1, self.n + 1)]
        return rows

    def _nn_buckets(self):
        """Per vertex: ``((dist, vertices-at-dist), ...)`` ascending by dist.

        Only finite distances appear.  Built once from the all-pairs table,
        so callers must respect ``_APSP_THRESHOLD``.
        """
        buckets = self._buckets
        if buckets is None:
            rows = self._distance_rows()
            out = [()]
            for v in range(1, self.n + 1):
                row = rows[v]
                by_dist: dict[int, list[int]] = {}
                for u in range(1, self.n + 1):
                    d = row[u]
                    if d != UNREACHABLE:
                        by_dist.setdefault(d, []).append(u)
                out.append(tuple((d, tuple(by_dist[d]))
                                 for d in sorted(by_dist)))
            buckets = self._buckets = tuple(out)
        return buckets

    def __eq__(self, other) -> bool:
        return (isinstance(other, ColoredGraph)
                and self.n == other.n and self.c == other.c
                and self.edges == other.edges and self.color == other.color)

    def __hash__(self) -> int:
        return hash((self.n, self.c, self.edges, self.color))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m}, c={self.c})"


class DistanceMatrix:
    """All-pairs hop distances; ``rows[u][v]`` is ``UNREACHABLE`` if no path."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = rows

    def d(self, u: int, v: int):
        return self.rows[u][v]


def all_pairs_hop_distances(g: ColoredGraph) -> DistanceMatrix:
    """One BFS per vertex; quadratic memory, shared with the graph's cache."""
    return DistanceMatrix(g._distance_rows())


def _validated_members(g: ColoredGraph, S) -> frozenset:
    members = frozenset(S)
    if not members:
        raise PreconditionError("subset must be nonempty")
    for v in members:
        if not (1 <= v <= g.n):
            raise PreconditionError(f"subset vertex {v} not in graph")
    return members


def _nearest_hits(g: ColoredGraph, v: int, members) -> tuple:
    """``(distance, members at minimum hop distance from v)``.

    Returns ``(UNREACHABLE, ())`` when no member is reachable.  Uses the
    cached distance buckets for small graphs and a frontier-by-frontier BFS
    beyond the threshold.
    """
    if g.n <= _APSP_THRESHOLD:
        for dist, verts in g._nn_buckets()[v]:
            hits = tuple(u for u in verts if u in members)
            if hits:
                return dist, hits
        return UNREACHABLE, ()
    adj = g.adjacency
    seen = bytearray(g.n + 1)
    seen[v] = 1
    frontier = [v]
    dist = 0
    while frontier:
        hits = tuple(u for u in frontier if u in members)
        if hits:
            return dist, hits
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    nxt.append(w)
        frontier = nxt
        dist += 1
    return UNREACHABLE, ()


def nearest_neighbors(g: ColoredGraph, v: int, S,
                      dist: DistanceMatrix | None = None) -> frozenset:
    """Members of ``S`` at minimum hop distance from ``v``.

    ``S`` must be nonempty and at least one member reachable from ``v``.
    Passing a precomputed ``dist`` matrix skips the BFS.
    """
    members = _validated_members(g, S)
    if not (1 <= v <= g.n):
        raise PreconditionError(f"vertex {v} not in graph")
    if dist is not None:
        row = dist.rows[v]
        best = min(row[u] for u in members)
        if best == UNREACHABLE:
            raise PreconditionError(f"no member of S reachable from vertex {v}")
        return frozenset(u for u in members if row[u] == best)
    _, hits = _nearest_hits(g, v, members)
    if not hits:
        raise PreconditionError(f"no member of S reachable from vertex {v}")
    return frozenset(hits)


def _consistency_scan(g: ColoredGraph, members, strict: bool) -> bool:
    """Unvalidated core of the checkers; ``members`` must be set-like."""
    color = g.color
    for v in range(1, g.n + 1):
        _, hits = _nearest_hits(g, v, members)
        if not hits:
            return False
        cv = color[v]
        if strict:
            if any(color[u] != cv for u in hits):
                return False
        elif all(color[u] != cv for u in hits):
            return False
    return True


def is_consistent(g: ColoredGraph, S) -> bool:
    """Does every vertex have a same-colored nearest neighbor in ``S``?

    The graph must be connected and ``S`` a nonempty subset of it.
    """
    members = _validated_members(g, S)
    if not g.is_connected:
        raise PreconditionError("graph must be connected")
    return _consistency_scan(g, members, strict=False)


def is_strict_consistent(g: ColoredGraph, S) -> bool:
    """Are *all* nearest neighbors in ``S`` same-colored, for every vertex?"""
    members = _validated_members(g, S)
    if not g.is_connected:
        raise PreconditionError("graph must be connected")
    return _consistency_scan(g, members, strict=True)


@dataclass(frozen=True)
class Blocks:
    """Partition into maximal connected monochromatic vertex sets.

    ``partition`` is ordered by smallest member; ``block_of`` maps each
    vertex to its index in ``partition``.
    """

    partition: tuple
    block_of: Mapping

    def __len__(self) -> int:
        return len(self.partition)


def blocks(g: ColoredGraph) -> Blocks:
    """Connected components of the subgraph kept by same-color edges."""
    adj = g.adjacency
    color = g.color
    block_of: dict[int, int] = {}
    parts = []
    for v in range(1, g.n + 1):
        if v in block_of:
            continue
        idx = len(parts)
        block_of[v] = idx
        comp = [v]
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in block_of and color[w] == color[u]:
                    block_of[w] = idx
                    comp.append(w)
                    stack.append(w)
        parts.append(frozenset(comp))
    return Blocks(tuple(parts), block_of)


@dataclass(frozen=True)
class Certificate:
    """A claimed (strict) consistent subset and where it came from."""

    variant: str      # "mcs" | "mscs"
    witness: tuple    # strictly increasing vertex ids
    size: int
    provenance: str   # "brute-force-optimal" | "tree-dp-optimal"
                      # | "constructed" | "user-supplied"

    def __post_init__(self):
        if self.variant not in ("mcs", "mscs"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if not self.witness:
            raise ValueError("witness must be nonempty")
        if list(self.witness) != sorted(set(self.witness)):
            raise ValueError("witness ids must be strictly increasing")
        if self.size != len(self.witness):
            raise ValueError("size must equal the witness cardinality")


def parse_graph(text: str) -> ColoredGraph:
    """Parse a CCG instance; raises :class:`ParseError` with line numbers."""
    header = None
    n = m = c = 0
    colors: dict[int, int] = {}
    edges: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        kind = parts[0]
        if header is None:
            if kind != "p" or len(parts) != 5 or parts[1] != "ccg":
                raise ParseError(lineno,
                                 "expected header 'p ccg <n> <m> <colors>'")
            try:
                n, m, c = int(parts[2]), int(parts[3]), int(parts[4])
            except ValueError:
                raise ParseError(lineno, "header fields must be integers") from None
            if n < 1 or m < 0 or c < 1:
                raise ParseError(lineno, f"malformed header counts n={n} m={m} colors={c}")
            header = lineno
            continue
        if kind == "p":
            raise ParseError(lineno, "duplicate header")
        if kind == "v":
            if len(parts) != 3:
                raise ParseError(lineno, "color line must be 'v <id> <color>'")
            try:
                vid, col = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "color line fields must be integers") from None
            if not (1 <= vid <= n):
                raise ParseError(lineno, f"vertex id {vid} out of range 1..{n}")
            if not (1 <= col <= c):
                raise ParseError(lineno, f"color id {col} out of range 1..{c}")
            if vid in colors:
                raise ParseError(lineno, f"duplicate color line for vertex {vid}")
            colors[vid] = col
        elif kind == "e":
            if len(parts) != 3:
                raise ParseError(lineno, "edge line must be 'e <u> <w>'")
            try:
                u, w = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "edge line fields must be integers") from None
            if not (1 <= u <= n and 1 <= w <= n):
                raise ParseError(lineno, f"vertex id out of range 1..{n} in edge ({u},{w})")
            if u == w:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            key = (u, w) if u < w else (w, u)
            if key in edges:
                raise ParseError(lineno, f"duplicate edge ({key[0]},{key[1]})")
            if len(edges) == m:
                raise ParseError(lineno, f"more than {m} edge lines")
            edges.add(key)
        else:
            raise ParseError(lineno, f"unrecognized line type {kind!r}")
    if header is None:
        raise ParseError(max(1, last_line), "missing 'p ccg' header")
    if len(colors) != n:
        missing = next(v for v in range(1, n + 1) if v not in colors)
        raise ParseError(last_line, f"missing color line for vertex {missing}")
    if len(edges) != m:
        raise ParseError(last_line, f"expected {m} edge lines, found {len(edges)}")
    return ColoredGraph(n, c, edges, colors)


def format_graph(g: ColoredGraph) -> str:
    """Canonical CCG serialization: header, colors ascending, sorted edges."""
    lines = [f"p ccg {g.n} {g.m} {g.c}"]
    lines.extend(f"v {v} {g.color[v]}" for v in range(1, g.n + 1))
    lines.extend(f"e {u} {w}" for u, w in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_subset(text: str, n: int) -> tuple[int, ...]:
    """Parse a one-line subset file against a graph with ``n`` vertices."""
    chosen = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] != "s":
            raise ParseError(lineno, "expected subset line 's <id> <id> ...'")
        if chosen is not None:
            raise ParseError(lineno, "duplicate subset line")
        try:
            ids = [int(x) for x in parts[1:]]
        except ValueError:
            raise ParseError(lineno, "subset ids must be integers") from None
        if not ids:
            raise ParseError(lineno, "subset must list at least one vertex")
        for a, b in zip(ids, ids[1:]):
            if a >= b:
                raise ParseError(lineno, "subset ids must be strictly increasing")
        for x in ids:
            if not (1 <= x <= n):
                raise ParseError(lineno, f"vertex id {x} out of range 1..{n}")
        chosen = tuple(ids)
    if chosen is None:
        raise ParseError(max(1, last_line), "missing subset line")
    return chosen


def format_subset(ids: Iterable[int]) -> str:
    ordered = sorted(set(ids))
    if not ordered:
        raise ValueError("subset must be nonempty")
    return "s " + " ".join(str(v) for v in ordered) + "\n"
