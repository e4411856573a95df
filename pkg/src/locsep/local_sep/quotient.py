"""Contracting the matching of an involution generator that spans a normal subgroup."""

from __future__ import annotations

from dataclasses import dataclass

from ..cayley import CayleyGraph, Graph, build
from ..groups import Group, is_normal_closure, quotient_group
from .report import FAIL, PASS, Check, skipped
from .separators import is_local_2separator, is_local_cutvertex


class QuotientError(ValueError):
    pass


@dataclass
class QuotientResult:
    contracted: Graph
    cayley: CayleyGraph
    quotient_group: Group
    coset_of: list[int]
    isomorphic: bool

    def image(self, v: int) -> int:
        """The contracted vertex containing v."""
        return self.coset_of[v]


def _require(G: CayleyGraph, h: int) -> None:
    g = G.group
    if h not in set(G.gens):
        raise QuotientError(f"{g.names[h]} is not a generator")
    if not g.is_involution(h):
        raise QuotientError(f"{g.names[h]} is not an involution")
    if not is_normal_closure(g, h):
        raise QuotientError(f"the subgroup generated by {g.names[h]} is not normal")


def quotient_by_involution(G: CayleyGraph, h: int) -> QuotientResult:
    """G/h: contract the h-edges, merge parallel edges, and compare with Cay(G/<h>, S/<h>) label by label."""
    _require(G, h)
    g = G.group
    Q, coset_of = quotient_group(g, [g.identity, h])
    arcs: dict[tuple[int, int], set[int]] = {}
    edges = set()
    for (a, b), labels in G.arcs.items():
        ca, cb = coset_of[a], coset_of[b]
        if ca == cb:
            continue  # contracted matching edge
        edges.add((ca, cb))
        arcs.setdefault((ca, cb), set()).update(coset_of[s] for s in labels)
    contracted = Graph.from_edges(Q.order, edges, Q.names, f"{G.label}/h", arcs)
    gens = sorted({coset_of[s] for s in G.gens} - {coset_of[g.identity]})
    cay = build(Q, gens)
    iso = contracted.adj == cay.adj and {k: frozenset(v) for k, v in contracted.arcs.items()} == dict(cay.arcs)
    return QuotientResult(contracted, cay, Q, coset_of, iso)


def loc2sep_to_cutvertex_check(G: CayleyGraph, h: int, r: int) -> Check:
    """An (r+2)-local 2-separator {I, h} becomes an r-local cutvertex of G/h."""
    name = "loc2sep-to-cutvertex"
    if r < 2:
        return skipped(name, "r >= 2")
    try:
        _require(G, h)
    except QuotientError as exc:
        return skipped(name, str(exc))
    e = G.group.identity
    if not is_local_2separator(G, e, h, r + 2):
        return skipped(name, f"{{I,h}} is not an {r + 2}-local 2-separator")
    q = quotient_by_involution(G, h)
    v = q.coset_of[e]
    ok = is_local_cutvertex(q.contracted, v, r)
    return Check(name, PASS if ok else FAIL, {"vertex": q.contracted.names[v], "r": r, "isomorphic": q.isomorphic})
