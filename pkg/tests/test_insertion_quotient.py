from __future__ import annotations

import pytest

from conftest import RUNG, cayley
from locsep.cayley import build, is_cycle_graph
from locsep.groups import make_alternating, make_cyclic, inverse_closure
from locsep.harness import INSERTION_CASES, a5_presentation, insertion_check
from locsep.local_sep import (PreconditionError, QuotientError, edge_insertion, insertion_preconditions,
                              is_local_2separator, is_local_cutvertex, loc2sep_to_cutvertex_check,
                              quotient_by_involution)


def test_cl12_quotient_is_the_12_cycle(cl12, c12):
    q = quotient_by_involution(cl12, cl12.group.index_of(RUNG))
    assert q.isomorphic and is_cycle_graph(q.contracted) and q.contracted.n == 12
    assert q.contracted.adj == c12.adj
    # every contracted arc carries the coset of the label it came from
    for (a, b), labels in cl12.arcs.items():
        if q.image(a) != q.image(b):
            assert {q.coset_of[s] for s in labels} <= set(q.contracted.labels(q.image(a), q.image(b)))


def test_quotient_of_c2_is_a_point():
    G = build(make_cyclic(2), [1])
    q = quotient_by_involution(G, 1)
    assert q.contracted.n == 1 and q.contracted.num_edges == 0 and q.isomorphic


def test_quotient_of_c4xc2_is_a_4_cycle():
    q = quotient_by_involution(cayley("product:cyclic:4,cyclic:2"), 1)
    assert q.isomorphic and is_cycle_graph(q.contracted) and q.contracted.n == 4


def test_quotient_preconditions():
    S3 = cayley("dihedral:3")
    reflection = 3
    assert S3.group.is_involution(reflection) and reflection in S3.gens
    with pytest.raises(QuotientError, match="not normal"):
        quotient_by_involution(S3, reflection)
    cl = cayley("product:cyclic:12,cyclic:2")
    with pytest.raises(QuotientError, match="not an involution"):
        quotient_by_involution(cl, cl.group.index_of("(g^1,g^0)"))
    with pytest.raises(QuotientError, match="not a generator"):
        quotient_by_involution(cl, cl.group.index_of("(g^6,g^0)"))
    assert loc2sep_to_cutvertex_check(S3, reflection, 5).status == "skipped"


@pytest.mark.parametrize("spec,r", [("product:cyclic:12,cyclic:2", 9), ("product:cyclic:24,cyclic:2", 18)])
def test_loc2sep_becomes_cutvertex(spec, r):
    G = cayley(spec)
    check = loc2sep_to_cutvertex_check(G, G.group.index_of(RUNG), r)
    assert check.status == "pass" and check.witness["isomorphic"]


def test_edge_insertion_on_cl24():
    G = cayley("product:cyclic:24,cyclic:2")
    res = edge_insertion(G, 4, 8, 20)
    assert res.verified and res.witness["already_generator"]
    assert res.h == G.group.index_of(RUNG)
    # recompute the postconditions independently of the result record
    assert is_local_2separator(res.graph, res.graph.identity, res.h, 8)
    assert not is_local_cutvertex(res.graph, res.graph.identity, 8)


def test_insertion_precondition_names(c12):
    assert insertion_preconditions(c12, 4, 8, 20).name == "no r_minus-local cutvertex"
    G = cayley("cyclic:12", ["g^1", "g^2"])
    assert insertion_preconditions(G, 3, 8, 20).name == "4 <= r_minus <= r_0 <= r_plus"
    assert insertion_preconditions(G, 4, 12, 20).name == "r_0 * r_minus <= 2 * r_plus"
    g = make_alternating(5)
    a, b = a5_presentation(g)
    A5 = build(g, inverse_closure(g, [a, b]))
    err = insertion_preconditions(A5, 4, 4, 8)
    assert err is not None
    with pytest.raises(PreconditionError):
        edge_insertion(c12, 4, 8, 20)


def test_cycle_precondition():
    from locsep.local_sep.insertion import insertion_preconditions as pre

    # a 12-cycle at r_minus = 12 has no 12-local cutvertex, so the cycle test is reached
    assert pre(cayley("cyclic:12"), 12, 12, 72).name == "not a cycle of length <= r_plus"


@pytest.mark.parametrize("case", INSERTION_CASES, ids=lambda c: f"{c[0]} {c[1]}")
def test_insertion_corpus_never_fails(case):
    assert insertion_check(*case).status in ("pass", "skipped")
