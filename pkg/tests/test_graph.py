import math

import pytest
from hypothesis import given, strategies as st

from consistent_subset import (Blocks, Certificate, ColoredGraph, ParseError,
                               PreconditionError, all_pairs_hop_distances,
                               blocks, format_graph, format_subset,
                               is_consistent, is_strict_consistent,
                               nearest_neighbors, parse_graph, parse_subset)
from consistent_subset.graph import UNREACHABLE

from helpers import RRBB, RRBB_TEXT, path_graph, star_graph


# --------------------------------------------------------------------------
# construction

def test_graph_fields():
    g = RRBB
    assert (g.n, g.m, g.c) == (4, 3, 2)
    assert g.color == (0, 1, 1, 2, 2)
    assert g.edges == frozenset({(1, 2), (2, 3), (3, 4)})
    assert g.neighbors(2) == (1, 3)
    assert g.degree(3) == 2


def test_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        ColoredGraph(0, 1, [], {})
    with pytest.raises(ValueError):
        ColoredGraph(2, 1, [(1, 1)], {1: 1, 2: 1})       # self loop
    with pytest.raises(ValueError):
        ColoredGraph(2, 1, [(1, 3)], {1: 1, 2: 1})       # endpoint range
    with pytest.raises(ValueError):
        ColoredGraph(2, 1, [], {1: 1, 2: 2})             # color range
    with pytest.raises(ValueError):
        ColoredGraph(2, 1, [], {1: 1})                   # missing color


def test_graph_equality_and_hash():
    g1 = path_graph([1, 2])
    g2 = ColoredGraph(2, 2, [(2, 1)], {1: 1, 2: 2})
    assert g1 == g2
    assert hash(g1) == hash(g2)
    assert g1 != path_graph([2, 1])


def test_connectivity_and_tree_flags():
    assert RRBB.is_connected and RRBB.is_tree
    disc = ColoredGraph(3, 1, [(1, 2)], {1: 1, 2: 1, 3: 1})
    assert not disc.is_connected and not disc.is_tree
    cyc = ColoredGraph(3, 1, [(1, 2), (2, 3), (1, 3)], {v: 1 for v in (1, 2, 3)})
    assert cyc.is_connected and not cyc.is_tree


# --------------------------------------------------------------------------
# parsing

def test_parse_golden():
    g = parse_graph(RRBB_TEXT)
    assert g == RRBB


def test_parse_allows_comments_and_blank_lines():
    text = ("c a remark\n\np ccg 2 1 2\nc mid\nv 1 1\nv 2 2\n\ne 1 2\nc end\n")
    g = parse_graph(text)
    assert (g.n, g.m, g.c) == (2, 1, 2)


def test_parse_accepts_any_line_order_after_header():
    text = "p ccg 2 1 1\ne 1 2\nv 2 1\nv 1 1\n"
    assert parse_graph(text) == parse_graph("p ccg 2 1 1\nv 1 1\nv 2 1\ne 1 2\n")


@pytest.mark.parametrize("text, line, fragment", [
    ("", 1, "missing 'p ccg' header"),
    ("c only a comment\n", 1, "missing 'p ccg' header"),
    ("v 1 1\n", 1, "expected header"),
    ("p ccg 1 0\n", 1, "expected header"),
    ("p ccg x 0 1\n", 1, "integers"),
    ("p ccg 0 0 1\n", 1, "malformed header counts"),
    ("p ccg 1 0 0\n", 1, "malformed header counts"),
    ("p ccg 1 0 1\np ccg 1 0 1\nv 1 1\n", 2, "duplicate header"),
    ("p ccg 1 0 1\nv 1\n", 2, "color line must be"),
    ("p ccg 1 0 1\nv 1 z\n", 2, "integers"),
    ("p ccg 1 0 1\nv 2 1\n", 2, "vertex id 2 out of range"),
    ("p ccg 1 0 1\nv 1 2\n", 2, "color id 2 out of range"),
    ("p ccg 2 1 1\nv 1 1\nv 1 1\n", 3, "duplicate color line"),
    ("p ccg 2 1 1\nv 1 1\nv 2 1\ne 1\n", 4, "edge line must be"),
    ("p ccg 2 1 1\nv 1 1\nv 2 1\ne 1 z\n", 4, "integers"),
    ("p ccg 2 1 1\nv 1 1\nv 2 1\ne 1 3\n", 4, "out of range"),
    ("p ccg 2 1 1\nv 1 1\nv 2 1\ne 1 1\n", 4, "self-loop"),
    ("p ccg 2 2 1\nv 1 1\nv 2 1\ne 1 2\ne 2 1\n", 5, "duplicate edge"),
    ("p ccg 2 1 1\nv 1 1\nv 2 1\ne 1 2\ne 1 2\n", 5, "duplicate edge"),
    ("p ccg 2 0 1\nv 1 1\nv 2 1\ne 1 2\n", 4, "more than 0 edge lines"),
    ("p ccg 2 1 1\nv 1 1\nv 2 1\nq 1 2\n", 4, "unrecognized line type"),
    ("p ccg 2 1 1\nv 1 1\ne 1 2\n", 3, "missing color line for vertex 2"),
    ("p ccg 2 2 1\nv 1 1\nv 2 1\ne 1 2\n", 4, "expected 2 edge lines, found 1"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)
    assert f"line {line}:" in str(exc.value)


def test_format_is_canonical():
    g = ColoredGraph(4, 2, [(3, 4), (2, 3), (2, 1)], {1: 1, 2: 1, 3: 2, 4: 2})
    assert format_graph(g) == RRBB_TEXT


def test_format_parse_round_trip_drops_comments():
    text = "c note\n" + RRBB_TEXT
    assert format_graph(parse_graph(text)) == RRBB_TEXT


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    c = draw(st.integers(min_value=1, max_value=3))
    colors = {v: draw(st.integers(min_value=1, max_value=c))
              for v in range(1, n + 1)}
    edges = {(i, i + 1) for i in range(1, n)}
    for u in range(1, n + 1):
        for w in range(u + 2, n + 1):
            if draw(st.booleans()):
                edges.add((u, w))
    return ColoredGraph(n, c, edges, colors)


@given(connected_graphs())
def test_round_trip_any_graph(g):
    assert parse_graph(format_graph(g)) == g


# --------------------------------------------------------------------------
# distances

def test_distance_matrix_on_path():
    d = all_pairs_hop_distances(RRBB)
    assert d.d(1, 4) == 3
    assert d.d(4, 1) == 3
    assert d.d(2, 2) == 0
    assert all(d.d(u, w) == d.d(w, u) for u in range(1, 5) for w in range(1, 5))


def test_distance_unreachable():
    disc = ColoredGraph(3, 1, [(1, 2)], {1: 1, 2: 1, 3: 1})
    d = all_pairs_hop_distances(disc)
    assert d.d(1, 3) == UNREACHABLE
    assert math.isinf(disc.hops_from(3)[1])


@given(connected_graphs())
def test_distance_axioms(g):
    d = all_pairs_hop_distances(g)
    verts = range(1, g.n + 1)
    for u in verts:
        assert d.d(u, u) == 0
        for w in verts:
            assert d.d(u, w) == d.d(w, u)
            if u != w:
                assert (d.d(u, w) == 1) == ((min(u, w), max(u, w)) in g.edges)
    for u in verts:
        for w in verts:
            for x in verts:
                assert d.d(u, w) <= d.d(u, x) + d.d(x, w)


# --------------------------------------------------------------------------
# nearest neighbors and the two checkers

def test_nearest_neighbors_examples():
    assert nearest_neighbors(RRBB, 2, {1, 3}) == frozenset({1, 3})
    assert nearest_neighbors(RRBB, 4, {1, 3}) == frozenset({3})
    assert nearest_neighbors(RRBB, 1, {1, 3}) == frozenset({1})
    d = all_pairs_hop_distances(RRBB)
    assert nearest_neighbors(RRBB, 2, {1, 3}, dist=d) == frozenset({1, 3})


def test_nearest_neighbors_validation():
    with pytest.raises(PreconditionError):
        nearest_neighbors(RRBB, 1, set())
    with pytest.raises(PreconditionError):
        nearest_neighbors(RRBB, 1, {9})
    with pytest.raises(PreconditionError):
        nearest_neighbors(RRBB, 9, {1})
    disc = ColoredGraph(3, 1, [(1, 2)], {1: 1, 2: 1, 3: 1})
    with pytest.raises(PreconditionError):
        nearest_neighbors(disc, 3, {1})


def test_checker_examples():
    assert is_consistent(RRBB, {1, 3})
    assert not is_strict_consistent(RRBB, {1, 3})   # vertex 2 ties on colors 1,2
    assert is_strict_consistent(RRBB, {2, 3})
    assert is_consistent(RRBB, {2, 3})
    assert not is_consistent(RRBB, {2})             # vertex 4's nearest is red
    assert is_consistent(RRBB, {1, 2, 3, 4})
    assert is_strict_consistent(RRBB, {1, 2, 3, 4})


def test_checker_validation():
    with pytest.raises(PreconditionError):
        is_consistent(RRBB, set())
    with pytest.raises(PreconditionError):
        is_consistent(RRBB, {5})
    disc = ColoredGraph(3, 1, [(1, 2)], {1: 1, 2: 1, 3: 1})
    with pytest.raises(PreconditionError):
        is_consistent(disc, {1})
    with pytest.raises(PreconditionError):
        is_strict_consistent(disc, {1})


@given(connected_graphs(), st.data())
def test_full_set_is_strict_and_strict_implies_consistent(g, data):
    everyone = frozenset(range(1, g.n + 1))
    assert is_strict_consistent(g, everyone)
    assert is_consistent(g, everyone)
    subset = frozenset(data.draw(
        st.sets(st.integers(min_value=1, max_value=g.n), min_size=1)))
    if is_strict_consistent(g, subset):
        assert is_consistent(g, subset)


@given(connected_graphs(), st.data())
def test_consistent_subset_covers_all_colors(g, data):
    subset = frozenset(data.draw(
        st.sets(st.integers(min_value=1, max_value=g.n), min_size=1)))
    if is_consistent(g, subset):
        used = {g.color[v] for v in range(1, g.n + 1)}
        assert {g.color[v] for v in subset} == used


# --------------------------------------------------------------------------
# blocks

def test_blocks_examples():
    assert blocks(RRBB).partition == (frozenset({1, 2}), frozenset({3, 4}))
    rbr = path_graph([1, 2, 1])
    assert blocks(rbr).partition == (frozenset({1}), frozenset({2}), frozenset({3}))
    mono = path_graph([1, 1, 1])
    assert blocks(mono).partition == (frozenset({1, 2, 3}),)
    assert len(blocks(mono)) == 1


def test_blocks_index_map():
    b = blocks(RRBB)
    assert b.block_of[1] == b.block_of[2] == 0
    assert b.block_of[3] == b.block_of[4] == 1


@given(connected_graphs())
def test_blocks_partition_and_quotient(g):
    b = blocks(g)
    seen = set()
    for part in b.partition:
        assert len({g.color[v] for v in part}) == 1
        assert not (seen & part)
        seen |= part
    assert seen == set(range(1, g.n + 1))
    # contracting blocks must leave no same-colored neighbors across blocks
    for u, w in g.edges:
        if b.block_of[u] != b.block_of[w]:
            assert g.color[u] != g.color[w]


# --------------------------------------------------------------------------
# subset files and certificates

def test_parse_subset_golden():
    assert parse_subset("s 1 3\n", 4) == (1, 3)
    assert parse_subset("c remark\ns 2\n", 4) == (2,)


@pytest.mark.parametrize("text, fragment", [
    ("", "missing subset line"),
    ("c nothing\n", "missing subset line"),
    ("x 1\n", "expected subset line"),
    ("s\n", "at least one vertex"),
    ("s 1 1\n", "strictly increasing"),
    ("s 3 1\n", "strictly increasing"),
    ("s 1 9\n", "out of range"),
    ("s one\n", "integers"),
    ("s 1\ns 2\n", "duplicate subset line"),
])
def test_parse_subset_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_subset(text, 4)
    assert fragment in str(exc.value)


def test_format_subset():
    assert format_subset([3, 1]) == "s 1 3\n"
    assert format_subset({2}) == "s 2\n"
    with pytest.raises(ValueError):
        format_subset([])


def test_subset_round_trip():
    assert parse_subset(format_subset([4, 2, 1]), 4) == (1, 2, 4)


def test_certificate_validation():
    Certificate("mcs", (1, 3), 2, "constructed")
    with pytest.raises(ValueError):
        Certificate("other", (1,), 1, "constructed")
    with pytest.raises(ValueError):
        Certificate("mcs", (), 0, "constructed")
    with pytest.raises(ValueError):
        Certificate("mcs", (3, 1), 2, "constructed")
    with pytest.raises(ValueError):
        Certificate("mcs", (1, 3), 3, "constructed")


def test_star_checker():
    star = star_graph(1, [2, 2, 2])
    assert is_consistent(star, {1, 2, 3, 4})
    # leaf 3's unique nearest member is the differently-colored center
    assert not is_consistent(star, {1, 2})
