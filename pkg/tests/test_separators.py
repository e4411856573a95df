from __future__ import annotations

import itertools

import pytest

from conftest import RUNG, cayley, small_graphs
from locsep.cayley import Graph, ball
from locsep.local_sep import (NotASeparator, connectivity_graph, find_local_2separators, first_local_separator,
                              is_local_2separator, is_local_cutvertex, local_2separations, local_cutvertices,
                              separations_from_components, separator_representatives)


def complete(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2), label=f"K{n}")


def test_cycle_vertices_are_cutvertices_iff_ball_is_a_path(c12):
    assert all(is_local_cutvertex(c12, v, 11) for v in c12.vertices())
    assert not is_local_cutvertex(c12, 0, 12)
    G = cayley("cyclic:25")
    assert local_cutvertices(G, 20) == list(range(25))


def test_cutvertex_rejects_nonpositive_radius(c12):
    with pytest.raises(ValueError):
        is_local_cutvertex(c12, 0, 0)


def test_a5_presentation_vertices_are_local_cutvertices():
    from locsep.harness import a5_presentation

    from locsep.cayley import build
    from locsep.groups import inverse_closure, make_alternating

    g = make_alternating(5)
    a, b = a5_presentation(g)
    G = build(g, inverse_closure(g, [a, b]))
    assert local_cutvertices(G, 9) == list(G.vertices())


def test_connectivity_graph_examples(cl12, c12):
    h = cl12.group.index_of(RUNG)
    cg = connectivity_graph(cl12, cl12.identity, h, 11)
    assert len(cg.components) == 2 and cg.disconnected and not cg.isolated
    assert not connectivity_graph(complete(5), 0, 1, 5).disconnected
    cg = connectivity_graph(c12, 0, 1, 11)
    assert cg.components == (frozenset({2}), frozenset({11}))
    with pytest.raises(ValueError):
        connectivity_graph(c12, 3, 3, 11)


def test_connectivity_graph_edges_come_from_one_ball(cl12):
    # every edge of the connectivity graph joins two vertices of one punctured ball component
    h = cl12.group.index_of(RUNG)
    X = (cl12.identity, h)
    cg = connectivity_graph(cl12, *X, 11)
    comps = [c for x in X for c in ball(cl12, x, 11).components(removed=X)]
    for a, b in cg.edges:
        assert any(a in c and b in c for c in comps)


def test_isolated_neighbours_are_recorded():
    # a pendant vertex next to X lies in no punctured ball component of positive size from the other side
    G = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    cg = connectivity_graph(G, 0, 2, 4)
    assert 4 in set().union(*cg.components)
    assert all(v in cg.vertices for v in cg.isolated)


def test_cl12_rungs_form_one_orbit(cl12):
    h = cl12.group.index_of(RUNG)
    seps = find_local_2separators(cl12, 11)
    pairs = {s.vertices for s in seps if s.kind == "pair"}
    rungs = {tuple(sorted((x, cl12.group.m(x, h)))) for x in cl12.vertices()}
    assert len(rungs) == 12 and rungs <= pairs
    # diagonal pairs {x, xgh} also split the local ladder strip
    assert separator_representatives(cl12, 11) == [h, cl12.group.index_of("(g^1,g^1)")]
    for gamma in cl12.vertices():
        assert {tuple(sorted(cl12.act(gamma, p))) for p in rungs} == rungs


def test_complete_graph_has_no_separators():
    assert find_local_2separators(complete(4), 4) == []
    assert first_local_separator(complete(4), 4) is None


def test_cutvertices_reported_before_pairs():
    seps = find_local_2separators(cayley("cyclic:25"), 20)
    kinds = [s.kind for s in seps]
    assert kinds[:25] == ["cutvertex"] * 25 and set(kinds[25:]) <= {"pair"}
    assert first_local_separator(cayley("cyclic:25"), 20).kind == "cutvertex"


@pytest.mark.parametrize("G", small_graphs(), ids=lambda G: G.label)
def test_cayley_shortcut_matches_pairwise_search(G):
    plain = Graph(G.n, G.adj, G.names, G.arcs, G.label)
    for r in (4, 6, 8):
        fast = {s.vertices for s in find_local_2separators(G, r)}
        slow = {s.vertices for s in find_local_2separators(plain, r)}
        assert fast == slow


@pytest.mark.parametrize("G", small_graphs(), ids=lambda G: G.label)
def test_separators_respect_distance_bound(G):
    for s in find_local_2separators(G, 8, include_cutvertices=False):
        a, b = s.vertices
        assert a < b and 2 * G.bfs(a)[b] <= 8 and is_local_2separator(G, a, b, 8)


def test_separation_counts():
    X = (0, 1)
    two = separations_from_components(X, (frozenset({2}), frozenset({3})), 6)
    three = separations_from_components(X, (frozenset({2}), frozenset({3}), frozenset({4})), 6)
    four = separations_from_components(X, tuple(frozenset({k}) for k in range(2, 6)), 6)
    assert (len(two), len(three), len(four)) == (1, 3, 7)
    for s in three:
        assert 2 in s.A and s.A & s.B == frozenset(X)
        assert s.A - set(X) and s.B - set(X)
    with pytest.raises(NotASeparator):
        separations_from_components(X, (frozenset({2, 3}),), 6)


def test_cl12_separation_sides(cl12):
    grp = cl12.group
    e, h = cl12.identity, grp.index_of(RUNG)
    (sep,) = local_2separations(cl12, (e, h), 11)
    g, gi = grp.index_of("(g^1,g^0)"), grp.index_of("(g^11,g^0)")
    side_g = {g, grp.m(g, h)}
    assert sep.A - {e, h} in (side_g, {gi, grp.m(gi, h)})
    assert sep.opposite(g, gi) and sep.same_side(g, grp.m(g, h))
    assert sep.side(e) == "X" and sep.swapped().A == sep.B
    with pytest.raises(KeyError):
        sep.side(grp.index_of("(g^6,g^0)"))
    with pytest.raises(NotASeparator):
        local_2separations(cl12, (e, g), 11)
