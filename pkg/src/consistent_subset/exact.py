"""Brute-force exact solvers.

Minimum (strict) consistent subsets are found by enumerating candidate
subsets in increasing cardinality and, within one cardinality, in
lexicographic order of the sorted vertex tuple; the first subset that
passes the checker is returned.  Two sound prunes keep the search small
without changing the reported optimum or witness: a consistent subset must
contain a vertex of every nonempty color class, and a strict consistent
subset must meet every block.  Subsets failing the applicable test never
pass the checker and are skipped.

The module also carries tiny enumeration oracles for minimum dominating
set, vertex cover, and set cover, which the instance generators and their
tests use as ground truth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import (Certificate, ColoredGraph, PreconditionError,
                    _consistency_scan, blocks)

#: Default vertex cap for subset enumeration; override explicitly when a
#: caller knowingly accepts exponential blow-up.
DEFAULT_VERTEX_CAP = 20

DOMINATING_SET = "dominating-set"
VERTEX_COVER = "vertex-cover"
SET_COVER = "set-cover"


def _minimum_certificate(g: ColoredGraph, variant: str, cap: int) -> Certificate:
    if g.n > cap:
        raise PreconditionError(
            f"graph has {g.n} vertices, enumeration cap is {cap}")
    if not g.is_connected:
        raise PreconditionError("graph must be connected")
    strict = variant == "mscs"
    if strict:
        part = blocks(g)
        group_of = part.block_of
        ngroups = len(part)
    else:
        present = sorted({g.color[v] for v in range(1, g.n + 1)})
        index = {col: i for i, col in enumerate(present)}
        group_of = {v: index[g.color[v]] for v in range(1, g.n + 1)}
        ngroups = len(present)
    group_bit = [0] * (g.n + 1)
    for v in range(1, g.n + 1):
        group_bit[v] = 1 << group_of[v]
    full = (1 << ngroups) - 1
    vertices = range(1, g.n + 1)
    for k in range(max(1, ngroups), g.n + 1):
        for combo in itertools.combinations(vertices, k):
            mask = 0
            for v in combo:
                mask |= group_bit[v]
            if mask != full:
                continue
            if _consistency_scan(g, set(combo), strict):
                return Certificate(variant, combo, k, "brute-force-optimal")
    raise AssertionError("unreachable: the full vertex set is always consistent")


def brute_force_mcs(g: ColoredGraph, cap: int = DEFAULT_VERTEX_CAP) -> Certificate:
    """Smallest consistent subset of a connected graph, by enumeration."""
    return _minimum_certificate(g, "mcs", cap)


def brute_force_mscs(g: ColoredGraph, cap: int = DEFAULT_VERTEX_CAP) -> Certificate:
    """Smallest strict consistent subset of a connected graph."""
    return _minimum_certificate(g, "mscs", cap)


@dataclass(frozen=True)
class OracleProblem:
    """A classic minimization instance for :func:`solve_oracle`."""

    kind: str       # DOMINATING_SET | VERTEX_COVER | SET_COVER
    instance: object


def min_dominating_set(g: ColoredGraph, cap: int = DEFAULT_VERTEX_CAP):
    """``(size, witness)`` of a minimum dominating set; colors ignored."""
    if g.n > cap:
        raise PreconditionError(
            f"graph has {g.n} vertices, enumeration cap is {cap}")
    closed = [0] * (g.n + 1)
    for v in range(1, g.n + 1):
        mask = 1 << v
        for w in g.neighbors(v):
            mask |= 1 << w
        closed[v] = mask
    targets = closed[1:]
    vertices = range(1, g.n + 1)
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(vertices, k):
            smask = 0
            for v in combo:
                smask |= 1 << v
            if all(t & smask for t in targets):
                return k, combo
    raise AssertionError("unreachable: V dominates itself")


def min_vertex_cover(g: ColoredGraph, cap: int = DEFAULT_VERTEX_CAP):
    """``(size, witness)`` of a minimum vertex cover; colors ignored."""
    if g.n > cap:
        raise PreconditionError(
            f"graph has {g.n} vertices, enumeration cap is {cap}")
    edge_list = sorted(g.edges)
    vertices = range(1, g.n + 1)
    for k in range(0, g.n + 1):
        for combo in itertools.combinations(vertices, k):
            chosen = set(combo)
            if all(u in chosen or w in chosen for u, w in edge_list):
                return k, combo
    raise AssertionError("unreachable: V covers every edge")


def min_set_cover(sc, cap: int = DEFAULT_VERTEX_CAP):
    """``(size, witness)`` with witness holding 1-based set indices.

    ``sc`` needs ``n`` (element count) and ``sets`` (iterables of elements).
    """
    m = len(sc.sets)
    if m > cap:
        raise PreconditionError(f"{m} sets exceeds enumeration cap {cap}")
    masks = [sum(1 << (e - 1) for e in s) for s in sc.sets]
    universe = (1 << sc.n) - 1
    for k in range(0, m + 1):
        for combo in itertools.combinations(range(m), k):
            got = 0
            for i in combo:
                got |= masks[i]
            if got == universe:
                return k, tuple(i + 1 for i in combo)
    raise PreconditionError("the union of the sets does not cover the universe")


def solve_oracle(problem: OracleProblem, cap: int = DEFAULT_VERTEX_CAP):
    """Dispatch to the matching enumeration oracle."""
    if problem.kind == DOMINATING_SET:
        return min_dominating_set(problem.instance, cap)
    if problem.kind == VERTEX_COVER:
        return min_vertex_cover(problem.instance, cap)
    if problem.kind == SET_COVER:
        return min_set_cover(problem.instance, cap)
    raise ValueError(f"unknown oracle problem kind {problem.kind!r}")
