from __future__ import annotations

import itertools

import pytest

from conftest import RUNG, cayley, crossing_graphs
from locsep.cayley import Graph
from locsep.local_sep import (crosses, crosses_by_enumeration, crossing_separators, crossing_symmetry_check,
                              crossing_walk, find_local_2separators, is_totally_nested, local_2separations,
                              traversal_profile)


def crossing_instances(G, r):
    for s in find_local_2separators(G, r, include_cutvertices=False):
        for sep in local_2separations(G, s.vertices, r):
            for pair in itertools.combinations([v for v in G.vertices() if v not in s.vertices], 2):
                yield sep, pair


@pytest.mark.parametrize("G", crossing_graphs(), ids=lambda G: G.label)
def test_bfs_matches_walk_enumeration(G):
    assert G.n <= 12
    instances = 0
    for r in range(2, 9):
        for sep, pair in crossing_instances(G, r):
            assert crosses(G, pair, sep, r) == crosses_by_enumeration(G, pair, sep, r), (r, sep.separator, pair)
            instances += 1
    assert instances > 0


def test_seeded_graphs_contain_crossing_instances():
    # the oracle comparison is not vacuous: most seeded graphs have crossing pairs
    hits = [any(crosses(G, pair, sep, r) for r in range(2, 9) for sep, pair in crossing_instances(G, r))
            for G in crossing_graphs()]
    assert sum(hits) >= 6


@pytest.mark.parametrize("G", crossing_graphs()[:4], ids=lambda G: G.label)
def test_crossing_walk_is_a_witness(G):
    for sep, pair in crossing_instances(G, 8):
        W = crossing_walk(G, pair, sep, 8)
        if W is None:
            continue
        assert W.is_walk_in(G) and {W.start, W.end} == set(pair)
        assert 2 * W.length <= 8 and traversal_profile(W, sep, cyclic=False).odd


def test_pair_in_separator_rejected(cl12):
    (sep,) = local_2separations(cl12, (0, 1), 11)
    with pytest.raises(ValueError):
        crosses(cl12, (0, 5), sep)


def test_same_side_pair_does_not_cross(cl12):
    grp = cl12.group
    h = grp.index_of(RUNG)
    (sep,) = local_2separations(cl12, (cl12.identity, h), 11)
    g = grp.index_of("(g^1,g^0)")
    assert not crosses(cl12, (g, grp.m(g, h)), sep)
    assert not crosses_by_enumeration(cl12, (g, grp.m(g, h)), sep, 11)


def test_cl12_rung_is_totally_nested(cl12):
    h = cl12.group.index_of(RUNG)
    seps = find_local_2separators(cl12, 11, include_cutvertices=False)
    for x in cl12.vertices():
        assert is_totally_nested(cl12, (x, cl12.group.m(x, h)) if x < cl12.group.m(x, h) else
                                 (cl12.group.m(x, h), x), 11, seps)


def test_crossing_diagonals():
    # 4x4 torus grid at r=4: the two diagonals of a square cross each other
    G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], label="square")
    assert crossing_separators(G, (0, 2), 4) == [(1, 3)]
    assert not is_totally_nested(G, (0, 2), 4) and not is_totally_nested(G, (1, 3), 4)


def test_unique_separator_is_totally_nested():
    # a triangle with a pendant path: {0,1}... only one pair separates at r=3
    G = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    seps = find_local_2separators(G, 3, include_cutvertices=False)
    for s in seps:
        others = [t for t in seps if t != s]
        if not others:
            assert is_totally_nested(G, s.vertices, 3, seps)


@pytest.mark.parametrize("spec,r", [("product:cyclic:12,cyclic:2", 11), ("product:cyclic:6,cyclic:2", 8),
                                    ("product:cyclic:4,cyclic:4", 6)])
def test_crossing_symmetry(spec, r):
    assert crossing_symmetry_check(cayley(spec), r).status != "fail"


def test_crossing_is_one_sided_with_local_cutvertices(c12):
    # on a short cycle {2,11} crosses the separation at {0,1} but not conversely
    (s01,) = local_2separations(c12, (0, 1), 11)
    assert crosses(c12, (2, 11), s01)
    assert not any(crosses(c12, (0, 1), s) for s in local_2separations(c12, (2, 11), 11))
    assert crossing_symmetry_check(c12, 11).status == "skipped"


@pytest.mark.parametrize("G", crossing_graphs(), ids=lambda G: G.label)
def test_symmetry_on_seeded_graphs_without_cutvertices(G):
    for r in range(4, 9):
        assert crossing_symmetry_check(G, r, roots=list(G.vertices())).status != "fail"
