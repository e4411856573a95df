from __future__ import annotations

import pytest

from locsep.cayley import build
from locsep.groups import from_permutations, inverse_closure, make_cyclic, parse_group_spec

RUNG = "(g^0,g^1)"


def cayley(spec: str, gens=None):
    """Cayley graph of a group spec; gens are element names (inverses added) or None for the standard set."""
    g = parse_group_spec(spec)
    if gens is None:
        return build(g, g.standard_gens)
    return build(g, inverse_closure(g, [g.index_of(x) for x in gens]))


def symmetric3():
    return from_permutations([(1, 0, 2), (1, 2, 0)], "S3")


@pytest.fixture(scope="session")
def cl12():
    return cayley("product:cyclic:12,cyclic:2")


@pytest.fixture(scope="session")
def c12():
    g = make_cyclic(12)
    return build(g, g.standard_gens)


# small corpus graphs (at most 16 vertices) used by the exhaustive oracle checks
SMALL_GRAPH_SPECS = [
    ("cyclic:12", None),
    ("cyclic:2", None),
    ("product:cyclic:3,cyclic:3", None),
    ("product:cyclic:4,cyclic:4", None),
    ("product:cyclic:6,cyclic:2", None),
    ("product:cyclic:8,cyclic:2", None),
    ("quaternion:8", None),
    ("dihedral:4", None),
    ("dihedral:6", None),
    ("cyclic:16", None),
    ("cyclic:7", ["g^1", "g^2"]),
    ("cyclic:10", ["g^1", "g^5"]),
    ("product:cyclic:4,cyclic:2", ["(g^1,g^0)", "(g^1,g^1)"]),
]


def small_graphs():
    return [cayley(spec, gens) for spec, gens in SMALL_GRAPH_SPECS]


def to_networkx(G):
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(G.vertices())
    H.add_edges_from(G.edges())
    return H


def crossing_graphs():
    """Eight graphs on at most 12 vertices with local 2-separators, fixed by seed."""
    import networkx as nx

    from locsep.cayley import Graph

    out = [
        cayley("cyclic:10"),
        cayley("cyclic:12"),
        cayley("product:cyclic:5,cyclic:2"),
        cayley("product:cyclic:6,cyclic:2"),
        cayley("product:cyclic:4,cyclic:3"),
        # two 4-cycles glued along an edge, with pendant paths closing a 10-cycle around
        Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2), (0, 6), (6, 7), (7, 5)],
                         label="glued-squares"),
    ]
    for seed in (3, 7):
        H = nx.random_regular_graph(3, 10, seed=seed)
        out.append(Graph.from_edges(10, sorted(tuple(sorted(e)) for e in H.edges()), label=f"cubic10-{seed}"))
    return out
