"""Instance-level checks of the structural lemmas about local 2-separators.

Each check first tests the lemma's hypotheses on the instance and reports
"skipped" when they fail, so a pass always means the conclusion was asserted.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

from ..cayley import CayleyGraph, Graph, Walk, ball, cached_ball, neighbourhood
from ..groups import is_normal_closure, nilpotency_class
from .report import FAIL, PASS, SKIPPED, Check, combine, skipped
from .separators import (ConnectivityGraph, LocalSeparation, connectivity_graph, find_local_2separators,
                         is_local_2separator, is_local_cutvertex, local_2separations, local_cutvertices)
from .traversal import element_traverses_at, traversal_profile
from .quotient import loc2sep_to_cutvertex_check, quotient_by_involution


def _has_cutvertex(G: Graph, r: int) -> bool:
    return bool(local_cutvertices(G, r))


# ------------------------------------------------------------ general lemmas


def no_edges_between_components(G: Graph, cg: ConnectivityGraph) -> Check:
    name = "no-edge-between-local-components"
    if cg.r < 4:
        return skipped(name, "r >= 4")
    cm = cg.component_map()
    for a in cg.vertices:
        for b in G.adj[a]:
            if b in cm and cm[a] != cm[b]:
                return Check(name, FAIL, {"edge": [a, b]})
    return Check(name, PASS, checked=len(cg.vertices))


def components_see_both(G: Graph, cg: ConnectivityGraph) -> Check:
    """A local component avoiding N(y) forces the other separator vertex to be an r-local cutvertex."""
    name = "component-avoiding-neighbourhood"
    triggered = 0
    for comp in cg.components:
        for y in cg.pair:
            if comp & set(G.adj[y]):
                continue
            triggered += 1
            x = cg.pair[0] if y == cg.pair[1] else cg.pair[1]
            if not is_local_cutvertex(G, x, cg.r):
                return Check(name, FAIL, {"component": sorted(comp), "avoids": y})
    if not triggered:
        return skipped(name, "every local component meets both neighbourhoods")
    return Check(name, PASS, checked=triggered)


def cutvertices_below_distance(G: Graph, cg: ConnectivityGraph) -> Check:
    """With no r-local cutvertex, both separator vertices are r'-local cutvertices for 2 <= r' < 2d."""
    name = "local-cutvertex-below-distance"
    r = cg.r
    x, y = cg.pair
    if _has_cutvertex(G, r):
        return skipped(name, "G has an r-local cutvertex")
    d = G.bfs(x)[y]
    rs = list(range(2, 2 * d))
    if not rs:
        return skipped(name, f"no r' with 1 <= r'/2 < d = {d}")
    for rp in rs:
        for v in (x, y):
            if not is_local_cutvertex(G, v, rp):
                return Check(name, FAIL, {"vertex": v, "r'": rp})
    return Check(name, PASS, {"d": d, "r'": rs}, checked=2 * len(rs))


def empty_corner(G: Graph, X: tuple[int, int], r: int, separators=None) -> Check:
    """Two edge separators {a', v} and {a, v} with a in A and a' in A' have B and B' meeting only in v."""
    name = "empty-corner"
    if r < 4:
        return skipped(name, "r >= 4")
    if not G.has_edge(*X):
        return skipped(name, "the separator is not an edge")
    checked = 0
    for v in X:
        a1 = X[0] if v == X[1] else X[1]
        if is_local_cutvertex(G, v, r):
            continue
        for a in G.adj[v]:
            if a == a1 or not is_local_2separator(G, a, v, r):
                continue
            for sep in local_2separations(G, X, r):
                for sep2 in local_2separations(G, (a, v), r):
                    s = sep if a in sep.A else sep.swapped()
                    s2 = sep2 if a1 in sep2.A else sep2.swapped()
                    checked += 1
                    if s.B & s2.B != {v}:
                        return Check(name, FAIL, {"X": list(X), "X'": [a, v], "B&B'": sorted(s.B & s2.B)})
    if not checked:
        return skipped(name, "no second edge separator shares a vertex")
    return Check(name, PASS, checked=checked)


def induced_separation(G: Graph, sep: LocalSeparation, x: int, r: int, host: Optional[Graph] = None):
    """(A_x, B_x): X plus the components of B_r(x) - X meeting A - B (resp. B - A)."""
    X = sep.separator
    B = cached_ball(host or G, x, r)
    ax, bx = set(X), set(X)
    a_only, b_only = sep.A - sep.B, sep.B - sep.A
    for comp in B.components(removed=X):
        if comp & a_only:
            ax |= comp
        if comp & b_only:
            bx |= comp
    return frozenset(ax), frozenset(bx), B


def _is_2separation_of_ball(ax, bx, B, X) -> bool:
    if ax & bx != set(X) or (ax | bx) != B.vertices:
        return False
    if not (ax - bx) or not (bx - ax):
        return False
    return not any((a in ax - bx and b in bx - ax) or (b in ax - bx and a in bx - ax) for a, b in B.edges)


def _compatible(sides: list[tuple[frozenset, frozenset]], nx: frozenset) -> bool:
    A = set().union(*(a for a, _ in sides)) & nx
    B = set().union(*(b for _, b in sides)) & nx
    return not (A & B)


def compatible_induced(G: Graph, X: tuple[int, int], r: int) -> Check:
    """Induced separations of the two balls are 2-separations, compatible, and glue back to {A, B}."""
    name = "induced-separations-compatible"
    if any(is_local_cutvertex(G, x, r) for x in X):
        return skipped(name, "a separator vertex is an r-local cutvertex")
    nx = neighbourhood(G, X)
    cg = connectivity_graph(G, *X, r)
    checked = 0
    for sep in local_2separations(G, X, r):
        sides = []
        for x in X:
            ax, bx, B = induced_separation(G, sep, x, r)
            if not _is_2separation_of_ball(ax, bx, B, X):
                return Check(name, FAIL, {"x": x, "reason": "not a 2-separation of the ball"})
            sides.append((ax, bx))
        if not _compatible(sides, nx):
            return Check(name, FAIL, {"reason": "incompatible"})
        A = (sides[0][0] | sides[1][0]) & (nx | set(X))
        Bs = (sides[0][1] | sides[1][1]) & (nx | set(X))
        ok = A & Bs == set(X) and (A | Bs) == nx | set(X) and all(
            c <= A - set(X) or c <= Bs - set(X) for c in cg.components)
        if not ok or A != sep.A or Bs != sep.B:
            return Check(name, FAIL, {"reason": "glued sides differ", "A": sorted(A), "B": sorted(Bs)})
        checked += 1
    return Check(name, PASS, checked=checked)


def _respecting_pairs(G: Graph, sep: LocalSeparation, d: int) -> set[tuple[int, int]]:
    """Non-adjacent pairs at distance <= d joined by some walk of length <= d traversing {A, B} evenly."""
    out = set()
    X = set(sep.separator)
    for a in G.vertices():
        frontier = [[a]]
        for _ in range(d):
            nxt = []
            for w in frontier:
                for y in G.adj[w[-1]]:
                    nxt.append(w + [y])
            frontier = nxt
            for w in frontier:
                b = w[-1]
                if b <= a or G.has_edge(a, b):
                    continue
                inner = set(w[1:-1])
                if not inner & X or not traversal_profile(Walk(tuple(w)), sep, cyclic=False).odd:
                    out.add((a, b))
    return out


def compatible_after_adding_edges(G: Graph, X: tuple[int, int], r: int, d: int = 2) -> Check:
    """Adding edges that respect {A, B} keeps the induced separations (cut to radius r' = r // d) compatible."""
    name = "separations-survive-added-edges"
    rp = r // d
    if rp < 2:
        return skipped(name, f"r' = r // d >= 2 (r={r}, d={d})")
    if any(is_local_cutvertex(G, x, r) for x in X):
        return skipped(name, "a separator vertex is an r-local cutvertex")
    sep = local_2separations(G, X, r)[0]
    F = _respecting_pairs(G, sep, d)
    if not F:
        return skipped(name, "no respecting edges to add")
    G2 = Graph.from_edges(G.n, list(G.edges()) + sorted(F), G.names, f"{G.label}+F")
    if 2 * G2.bfs(X[0]).get(X[1], r + 1) > rp:
        return skipped(name, "separator vertices farther than r'/2 apart in G'")
    nx = neighbourhood(G, X)
    sides = []
    for x in X:
        ax, bx, _ = induced_separation(G, sep, x, r)
        B2 = ball(G2, x, rp)
        ax2, bx2 = ax & B2.vertices, bx & B2.vertices
        if not _is_2separation_of_ball(ax2, bx2, B2, X):
            return Check(name, FAIL, {"x": x, "added": len(F)})
        sides.append((ax2, bx2))
    if not _compatible(sides, nx):
        return Check(name, FAIL, {"reason": "incompatible", "added": len(F)})
    return Check(name, PASS, {"added_edges": len(F), "r'": rp, "d": d}, checked=len(F))


def section_lemma_suite(G: Graph, X: Iterable[int], r: int) -> Check:
    X = tuple(X)
    if not is_local_2separator(G, X[0], X[1], r):
        return skipped("section-lemmas", f"{X} is not an {r}-local 2-separator")
    cg = connectivity_graph(G, *X, r)
    return combine("section-lemmas", [
        no_edges_between_components(G, cg),
        components_see_both(G, cg),
        cutvertices_below_distance(G, cg),
        empty_corner(G, X, r),
        compatible_induced(G, X, r),
        compatible_after_adding_edges(G, X, r),
    ])


# --------------------------------------------------------- Cayley-graph suites


def _setting(G: CayleyGraph, h: int, r: int) -> Optional[str]:
    """Reason the standing hypotheses fail, or None."""
    if r < 3:
        return "r >= 3"
    if h not in set(G.gens):
        return "h is a generator"
    if not is_local_2separator(G, G.identity, h, r):
        return "{I,h} is an r-local 2-separator"
    if is_local_cutvertex(G, G.identity, r):
        return "no r-local cutvertex"
    return None


def traversal_kinds(G: CayleyGraph, cg: ConnectivityGraph, g: int) -> dict[str, bool]:
    grp = G.group
    h = cg.pair[0] if cg.pair[1] == grp.identity else cg.pair[1]
    cm = cg.component_map()
    gi = grp.inv[g]

    def distinct(a, b):
        return a in cm and b in cm and cm[a] != cm[b]

    return {
        "at_identity": element_traverses_at(G, cg, g, grp.identity),
        "at_h": element_traverses_at(G, cg, g, h),
        "symmetric": distinct(gi, grp.mul[h][g]),
        "antisymmetric": distinct(gi, grp.mul[h][gi]),
    }


def involution_suite(G: CayleyGraph, h: int, r: int, klass: Optional[int] = None) -> Check:
    """Conclusions about an involution h spanning a local 2-separator {I, h}."""
    name = "involution-case"
    grp = G.group
    why = _setting(G, h, r)
    if why is None and not grp.is_involution(h):
        why = "h is an involution"
    if klass is None:
        klass = nilpotency_class(grp).klass
    if why is None and klass is None:
        why = "the group is nilpotent"
    if why is not None:
        return skipped(name, why)
    n = klass
    e = grp.identity
    cg = connectivity_graph(G, e, h, r)
    others = [g for g in G.gens if g != h]
    kinds = {g: traversal_kinds(G, cg, g) for g in others}
    checks = []

    bad = [g for g, k in kinds.items() if k["at_identity"] != k["at_h"]]
    checks.append(Check("traversal-at-both-vertices", FAIL if bad else PASS,
                        {"g": grp.names[bad[0]]} if bad else None, checked=len(kinds)))

    if r >= max(2 ** (n + 1), 5):
        viol = []
        for g, k in kinds.items():
            if k["symmetric"] and not grp.commutes(g, h):
                viol.append((g, "symmetric but does not commute"))
            if k["antisymmetric"] and not k["symmetric"] and not grp.is_involution(grp.mul[g][h]):
                viol.append((g, "antisymmetric only but gh is not an involution"))
        checks.append(Check("symmetric-commutes", FAIL if viol else PASS,
                            {"g": grp.names[viol[0][0]], "reason": viol[0][1]} if viol else None,
                            checked=len(kinds)))
    else:
        checks.append(skipped("symmetric-commutes", f"r >= max(2^(n+1), 5) with n = {n}"))

    if r >= 2 ** (n + 2):
        bad = [g for g, k in kinds.items() if not (k["at_identity"] or k["at_h"])]
        checks.append(Check("every-generator-traverses", FAIL if bad else PASS,
                            {"g": grp.names[bad[0]]} if bad else None, checked=len(kinds)))
    else:
        checks.append(skipped("every-generator-traverses", f"r >= 2^(n+2) with n = {n}"))

    if r >= max(2 ** (n + 2), 10):
        bad = [g for g, k in kinds.items() if k["antisymmetric"] and not k["symmetric"]]
        checks.append(Check("no-antisymmetric-only", FAIL if bad else PASS,
                            {"g": grp.names[bad[0]]} if bad else None, checked=len(kinds)))
        normal = is_normal_closure(grp, h)
        checks.append(Check("generated-subgroup-normal", PASS if normal else FAIL, {"h": grp.names[h]}))
        if normal:
            q = quotient_by_involution(G, h)
            checks.append(Check("quotient-is-cayley-graph", PASS if q.isomorphic else FAIL,
                                {"order": q.quotient_group.order}))
            checks.append(loc2sep_to_cutvertex_check(G, h, r - 2))
    else:
        checks.append(skipped("no-antisymmetric-only", f"r >= max(2^(n+2), 10) with n = {n}"))
        checks.append(skipped("generated-subgroup-normal", f"r >= max(2^(n+2), 10) with n = {n}"))
    return combine(name, checks, note=f"class {n}")


def non_involution_suite(G: CayleyGraph, h: int, r: int, klass: Optional[int] = None) -> Check:
    """Anchor property and the conclusion S within {h^+-1, h^+-2} for a non-involution h."""
    name = "non-involution-case"
    grp = G.group
    why = _setting(G, h, r)
    if why is None and grp.mul[h][h] == grp.identity:
        why = "h is not an involution"
    if klass is None:
        klass = nilpotency_class(grp).klass
    if why is None and klass is None:
        why = "the group is nilpotent"
    if why is not None:
        return skipped(name, why)
    n = klass
    e = grp.identity
    cg = connectivity_graph(G, e, h, r)
    cm = cg.component_map()
    h2 = grp.mul[h][h]
    hinv = grp.inv[h]
    checks = []
    if r >= 3 * 2 ** n:
        bad = []
        for g in G.gens:
            if g in (h, hinv):
                continue
            gi = grp.inv[g]
            same = [cm.get(x) == cm.get(h2) for x in (g, gi) if x in cm]
            if not any(same):
                bad.append(g)
        checks.append(Check("anchor", FAIL if bad else PASS, {"g": grp.names[bad[0]]} if bad else None,
                            checked=len(G.gens)))
    else:
        checks.append(skipped("anchor", f"r >= 3 * 2^n with n = {n}"))
    if r >= 2 ** (n + 2):
        allowed = {h, hinv, h2, grp.inv[h2]}
        extra = sorted(set(G.gens) - allowed)
        checks.append(Check("generators-are-powers-of-h", FAIL if extra else PASS,
                            {"extra": [grp.names[x] for x in extra]} if extra else None))
    else:
        checks.append(skipped("generators-are-powers-of-h", f"r >= 2^(n+2) with n = {n}"))
    return combine(name, checks, note=f"class {n}")


def downward_locality_check(G: Graph, r: int) -> Check:
    """An r-local cutvertex is an r'-local cutvertex for all 2 <= r' < r.

    At r' = 1 the punctured ball is empty, so no vertex qualifies.
    """
    cuts = local_cutvertices(G, r)
    if not cuts:
        return skipped("downward-locality", "no r-local cutvertex")
    for v in cuts[:4]:
        for rp in range(2, r):
            if not is_local_cutvertex(G, v, rp):
                return Check("downward-locality", FAIL, {"vertex": v, "r'": rp})
    return Check("downward-locality", PASS, checked=min(len(cuts), 4) * (r - 2))


def orbit_closure_check(G: CayleyGraph, r: int, samples: Iterable[int] = ()) -> Check:
    """Left translates of separators are separators."""
    seps = [s for s in find_local_2separators(G, r, include_cutvertices=False)]
    gammas = list(samples) or list(G.vertices())[:8]
    checked = 0
    for s in seps[:16]:
        for gamma in gammas:
            a, b = G.act(gamma, s.vertices)
            checked += 1
            if not is_local_2separator(G, a, b, r):
                return Check("orbit-closure", FAIL, {"separator": list(s.vertices), "gamma": gamma})
    return Check("orbit-closure", PASS if seps else SKIPPED, checked=checked)


__all__ = [
    "section_lemma_suite", "involution_suite", "non_involution_suite", "traversal_kinds",
    "downward_locality_check", "orbit_closure_check", "induced_separation",
]
