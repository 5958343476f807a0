"""Reference implementations and tiny graph builders for the test suite.

The ``ref_*`` functions are deliberately written from scratch against plain
``(n, colors, edges)`` data — no shared code with the library — so they can
serve as independent oracles.  They enumerate without any pruning and check
consistency with their own BFS, trading speed for obviousness; keep inputs
small (n <= 10 or so).
"""

import itertools
from collections import deque

from consistent_subset import ColoredGraph


# --------------------------------------------------------------------------
# independent reference oracles (no library code)

def ref_adjacency(n, edges):
    adj = {v: [] for v in range(1, n + 1)}
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    return adj


def ref_distances(adj, src):
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def ref_is_consistent(n, colors, edges, subset, strict=False):
    """``colors`` maps vertex -> color; ``subset`` is any iterable."""
    adj = ref_adjacency(n, edges)
    chosen = set(subset)
    for v in range(1, n + 1):
        dist = ref_distances(adj, v)
        best = min(dist[u] for u in chosen if u in dist)
        nearest = [u for u in chosen if u in dist and dist[u] == best]
        same = [u for u in nearest if colors[u] == colors[v]]
        if strict:
            if len(same) != len(nearest):
                return False
        elif not same:
            return False
    return True


def ref_minimum_subset(n, colors, edges, strict=False):
    """Smallest (strict) consistent subset by plain enumeration.

    Tries every subset in increasing-cardinality, lexicographic order and
    returns the first that passes — the same documented order the library
    promises, so witnesses must match exactly.
    """
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(1, n + 1), k):
            if ref_is_consistent(n, colors, edges, combo, strict):
                return combo
    raise AssertionError("no consistent subset found (disconnected input?)")


def ref_min_dominating(n, edges):
    adj = ref_adjacency(n, edges)
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(1, n + 1), k):
            chosen = set(combo)
            if all(v in chosen or any(u in chosen for u in adj[v])
                   for v in range(1, n + 1)):
                return combo
    raise AssertionError("unreachable")


def ref_min_vertex_cover(n, edges):
    for k in range(0, n + 1):
        for combo in itertools.combinations(range(1, n + 1), k):
            chosen = set(combo)
            if all(u in chosen or w in chosen for u, w in edges):
                return combo
    raise AssertionError("unreachable")


def ref_min_set_cover(n, sets):
    universe = set(range(1, n + 1))
    for k in range(0, len(sets) + 1):
        for combo in itertools.combinations(range(1, len(sets) + 1), k):
            covered = set()
            for j in combo:
                covered |= set(sets[j - 1])
            if covered >= universe:
                return combo
    raise AssertionError("the sets do not cover the universe")


# --------------------------------------------------------------------------
# graph builders

def path_graph(colors):
    n = len(colors)
    return ColoredGraph(n, max(colors), [(i, i + 1) for i in range(1, n)],
                        {i: c for i, c in enumerate(colors, 1)})


def cycle_graph(colors):
    n = len(colors)
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return ColoredGraph(n, max(colors), edges,
                        {i: c for i, c in enumerate(colors, 1)})


def star_graph(center_color, leaf_colors):
    colors = [center_color] + list(leaf_colors)
    n = len(colors)
    return ColoredGraph(n, max(colors), [(1, i) for i in range(2, n + 1)],
                        {i: c for i, c in enumerate(colors, 1)})


def complete_graph(n, color=1):
    return ColoredGraph(n, color, list(itertools.combinations(range(1, n + 1), 2)),
                        {v: color for v in range(1, n + 1)})


RRBB_TEXT = "p ccg 4 3 2\nv 1 1\nv 2 1\nv 3 2\nv 4 2\ne 1 2\ne 2 3\ne 3 4\n"
RRBB = path_graph([1, 1, 2, 2])
