"""Finite windows of the local coverings of long cycles and circular ladders.

A window is a finite piece of the infinite cover (a path or a ladder strip)
with a projection onto the base Cayley graph. Ends of the infinite cover are
proxied by the two window boundaries; nothing here computes ends in general.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .cayley import CayleyGraph, Graph, Walk, build, edge_key
from .groups import direct_product, make_cyclic
from .local_sep.report import FAIL, PASS, Check, combine

ENDS_PROXY = "ends are proxied by the left and right window boundaries"


def default_half_width(n: int, r: int) -> int:
    """3 * max(n, r): leaves an interior after a margin of r at each side."""
    return 3 * max(n, r)


@dataclass(eq=False)
class CoverWindow:
    graph: Graph
    base: CayleyGraph
    projection: tuple[int, ...]
    position: tuple[int, ...]  # signed offset k of each window vertex along the strip
    half_width: int

    @property
    def left(self) -> frozenset[int]:
        return frozenset(v for v, k in enumerate(self.position) if k == -self.half_width)

    @property
    def right(self) -> frozenset[int]:
        return frozenset(v for v, k in enumerate(self.position) if k == self.half_width)

    def interior(self, r: int) -> list[int]:
        """Vertices at strip distance more than r from both boundaries."""
        return [v for v, k in enumerate(self.position) if abs(k) < self.half_width - r]

    def is_interior(self, v: int, r: int) -> bool:
        return abs(self.position[v]) < self.half_width - r

    def without_edge(self, u: int, v: int) -> "CoverWindow":
        """A copy with one edge removed (used as a negative control)."""
        g = self.graph
        edges = [e for e in g.edges() if e != edge_key(u, v)]
        arcs = {k: lab for k, lab in g.arcs.items() if edge_key(*k) != edge_key(u, v)}
        return CoverWindow(Graph.from_edges(g.n, edges, g.names, g.label + "-e", arcs),
                           self.base, self.projection, self.position, self.half_width)

    def to_json(self, r: Optional[int] = None) -> dict:
        out = self.graph.to_json()
        out["projection"] = list(self.projection)
        if r is not None:
            out["interior"] = [self.is_interior(v, r) for v in range(self.graph.n)]
        return out


def _window(base: CayleyGraph, edges, projection, position, names, label, L) -> CoverWindow:
    grp = base.group
    arcs = {}
    for u, v in edges:
        arcs[(u, v)] = {grp.mul[grp.inv[projection[u]]][projection[v]]}
        arcs[(v, u)] = {grp.mul[grp.inv[projection[v]]][projection[u]]}
    g = Graph.from_edges(len(projection), edges, names, label, arcs)
    return CoverWindow(g, base, tuple(projection), tuple(position), L)


def path_window(n: int, L: int) -> CoverWindow:
    """The path on 2L+1 vertices k = -L..L covering the n-cycle via k -> k mod n."""
    if n < 3 or L < n:
        raise ValueError(f"need n >= 3 and L >= n (n={n}, L={L})")
    grp = make_cyclic(n)
    base = build(grp, grp.standard_gens)
    ks = list(range(-L, L + 1))
    edges = [(j, j + 1) for j in range(2 * L)]
    return _window(base, edges, [k % n for k in ks], ks, [str(k) for k in ks], f"path({n},{L})", L)


def ladder_window(i: int, L: int) -> CoverWindow:
    """The ladder strip (k, e), |k| <= L, covering the circular ladder on C_i x C_2."""
    if i < 3 or L < i:
        raise ValueError(f"need i >= 3 and L >= i (i={i}, L={L})")
    grp = direct_product(make_cyclic(i), make_cyclic(2))
    base = build(grp, grp.standard_gens)

    def vid(k: int, e: int) -> int:
        return (k + L) * 2 + e

    projection, position, names, edges = [], [], [], []
    for k in range(-L, L + 1):
        for e in (0, 1):
            projection.append((k % i) * 2 + e)
            position.append(k)
            names.append(f"({k},{e})")
        edges.append((vid(k, 0), vid(k, 1)))
        if k < L:
            edges += [(vid(k, 0), vid(k + 1, 0)), (vid(k, 1), vid(k + 1, 1))]
    return _window(base, edges, projection, position, names, f"ladder({i},{L})", L)


# ------------------------------------------------------------- verification


def _star_check(W: CoverWindow, G: Graph, r: int) -> Check:
    for v in W.interior(r):
        pv = W.projection[v]
        image = [W.projection[u] for u in W.graph.adj[v]]
        if sorted(image) != sorted(G.adj[pv]):
            return Check("star-bijection", FAIL, {"vertex": W.graph.names[v], "image": image,
                                                  "base_star": list(G.adj[pv])})
        for u in W.graph.adj[v]:
            if W.graph.labels(v, u) != G.labels(pv, W.projection[u]):
                return Check("star-bijection", FAIL, {"vertex": W.graph.names[v], "edge": [v, u]})
    return Check("star-bijection", PASS, checked=len(W.interior(r)))


def _lift_step(W: CoverWindow, w: int, b_next: int) -> Optional[int]:
    for u in W.graph.adj[w]:
        if W.projection[u] == b_next:
            return u
    return None


def lift_walk(W: CoverWindow, start: int, base_walk: Walk) -> Optional[Walk]:
    """Lift a base walk starting at projection(start); None if some step has no lift."""
    if base_walk.start != W.projection[start]:
        raise ValueError("walk does not start at the image of the start vertex")
    out = [start]
    for b in base_walk.vertices[1:]:
        u = _lift_step(W, out[-1], b)
        if u is None:
            return None
        out.append(u)
    return Walk(tuple(out))


def _closed_walks_lift(W: CoverWindow, G: Graph, v: int, r: int) -> Optional[dict]:
    """Synchronized enumeration of walks of length <= r from v and projection(v).

    Layer t holds every (window vertex, base vertex) pair reachable by a base walk
    of length t and its lift; a closed base walk lifting open shows up as a pair
    (w, projection(v)) with w != v. Returns a witness dict or None.
    """
    pv = W.projection[v]
    layer = {(v, pv): None}
    parents: list[dict] = [layer]
    for t in range(1, r + 1):
        nxt: dict = {}
        for (w, b) in layer:
            for c in G.adj[b]:
                u = _lift_step(W, w, c)
                if u is None:
                    return {"vertex": W.graph.names[v], "reason": "no lift", "at": W.graph.names[w]}
                nxt.setdefault((u, c), (w, b))
        parents.append(nxt)
        layer = nxt
        for (w, b) in layer:
            if b == pv and w != v:
                walk, state = [], (w, b)
                for s in range(t, -1, -1):
                    walk.append(state[1])
                    state = parents[s][state]
                return {"vertex": W.graph.names[v], "base_walk": walk[::-1], "lift_end": W.graph.names[w]}
    return None


def _lifting_check(W: CoverWindow, G: Graph, r: int) -> Check:
    interior = W.interior(r)
    for v in interior:
        bad = _closed_walks_lift(W, G, v, r)
        if bad is not None:
            return Check("closed-walks-lift-closed", FAIL, bad)
    return Check("closed-walks-lift-closed", PASS, checked=len(interior))


def unfolded_cycle(W: CoverWindow, G: Graph, r: int) -> Optional[tuple[Walk, Walk]]:
    """(base cycle of length > r, its open lift) starting at the central vertex, or None."""
    center = min(W.interior(r), key=lambda v: (abs(W.position[v]), v), default=None)
    if center is None:
        return None
    pc = W.projection[center]
    parent = {center: None}
    queue = deque([center])
    while queue:
        x = queue.popleft()
        for y in W.graph.adj[x]:
            if y in parent:
                continue
            parent[y] = x
            if W.projection[y] == pc:
                path = [y]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                lift = Walk(tuple(reversed(path)))
                base = Walk(tuple(W.projection[u] for u in lift.vertices))
                if base.is_cycle() and base.length > r:
                    return base, lift
                continue
            queue.append(y)
    return None


def verify_covering_window(W: CoverWindow, G: Optional[Graph] = None, r: int = 0) -> Check:
    """Star bijection and closed-walk lifting on the interior, plus one long cycle lifting open."""
    G = W.base if G is None else G
    if not W.interior(r):
        return Check("covering-window", FAIL, note=f"empty interior at margin r={r}")
    checks = [_star_check(W, G, r), _lifting_check(W, G, r)]
    found = unfolded_cycle(W, G, r)
    if found is None:
        checks.append(Check("long-cycle-unfolds", FAIL, note=f"no cycle longer than {r} lifts open"))
    else:
        base, lift = found
        checks.append(Check("long-cycle-unfolds", PASS, {
            "cycle_length": base.length,
            "lift": [W.graph.names[lift.start], W.graph.names[lift.end]],
        }))
    return combine("covering-window", checks, note=ENDS_PROXY)


def _separates(W: CoverWindow, removed: tuple[int, ...]) -> bool:
    left, right = W.left - set(removed), W.right - set(removed)
    if not left or not right:
        return False
    reach = W.graph.bfs(next(iter(left)), removed=removed)
    return not any(v in reach for v in right)


def ends_separated(W: CoverWindow, k: int, r: int = 0) -> Optional[tuple[int, ...]]:
    """A set of at most k interior vertices separating the two boundaries, or None.

    Single vertices are tried first, then adjacent pairs, then all pairs.
    """
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    interior = sorted(W.interior(r), key=lambda v: (abs(W.position[v]), v))
    for v in interior:
        if _separates(W, (v,)):
            return (v,)
    if k == 1:
        return None
    inside = set(interior)
    for v in interior:
        for u in W.graph.adj[v]:
            if u in inside and v < u and _separates(W, (v, u)):
                return (v, u)
    for v, u in itertools.combinations(interior, 2):
        if _separates(W, (v, u)):
            return (v, u)
    return None
