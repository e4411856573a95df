"""Local cutvertices, connectivity graphs, local 2-separators and their separations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from ..cayley import CayleyGraph, Graph, cached_ball, neighbourhood


class NotASeparator(ValueError):
    pass


def is_local_cutvertex(G: Graph, v: int, r: int) -> bool:
    """B_r(v) - v is disconnected."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return len(cached_ball(G, v, r).components(removed=(v,))) >= 2


def local_cutvertices(G: Graph, r: int) -> list[int]:
    if isinstance(G, CayleyGraph):
        return list(G.vertices()) if is_local_cutvertex(G, G.identity, r) else []
    return [v for v in G.vertices() if is_local_cutvertex(G, v, r)]


class _UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class ConnectivityGraph:
    pair: tuple[int, int]
    r: int
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    components: tuple[frozenset[int], ...]
    isolated: frozenset[int] = frozenset()

    @property
    def disconnected(self) -> bool:
        return len(self.components) >= 2

    def component_of(self, v: int) -> int:
        for i, c in enumerate(self.components):
            if v in c:
                return i
        raise KeyError(f"{v} is not a vertex of the connectivity graph")

    def component_map(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.components) for v in c}


def connectivity_graph(G: Graph, v0: int, v1: int, r: int) -> ConnectivityGraph:
    """Graph on N({v0, v1}); a ~ b when they share a component of B_r(v_i) - v0 - v1."""
    if v0 == v1:
        raise ValueError("connectivity graph needs two distinct vertices")
    X = (v0, v1)
    nx = neighbourhood(G, X)
    uf = _UnionFind(nx)
    edges = set()
    seen_in_ball: set[int] = set()
    for v in X:
        for comp in cached_ball(G, v, r).components(removed=X):
            members = sorted(comp & nx)
            seen_in_ball.update(members)
            for a, b in itertools.combinations(members, 2):
                edges.add((a, b))
                uf.union(a, b)
    groups: dict[int, set[int]] = {}
    for v in nx:
        groups.setdefault(uf.find(v), set()).add(v)
    comps = tuple(sorted((frozenset(g) for g in groups.values()), key=min))
    return ConnectivityGraph((min(X), max(X)), r, tuple(sorted(nx)), frozenset(edges), comps,
                             frozenset(nx - seen_in_ball))


def is_local_2separator(G: Graph, v0: int, v1: int, r: int) -> bool:
    if v0 == v1:
        return False
    d = G.bfs(v0, limit=r // 2).get(v1)
    if d is None or 2 * d > r:
        return False
    return connectivity_graph(G, v0, v1, r).disconnected


@dataclass(frozen=True)
class LocalSeparator:
    kind: str
    vertices: tuple[int, ...]
    r: int
    components: tuple[frozenset[int], ...] = ()

    def as_dict(self, G: Optional[Graph] = None) -> dict:
        name = (lambda v: G.names[v]) if G is not None else str
        return {
            "kind": self.kind,
            "vertices": [name(v) for v in self.vertices],
            "components": [sorted(name(v) for v in c) for c in self.components],
        }


def _pair_separator(G: Graph, a: int, b: int, r: int) -> Optional[LocalSeparator]:
    cg = connectivity_graph(G, a, b, r)
    if cg.disconnected:
        return LocalSeparator("pair", cg.pair, r, cg.components)
    return None


def separator_representatives(G: CayleyGraph, r: int) -> list[int]:
    """Elements s (one per pair {s, s^-1}) with {identity, s} an r-local 2-separator, by distance then index."""
    e = G.identity
    dist = G.bfs(e, limit=r // 2)
    inv = G.group.inv
    out = []
    for s, d in sorted(dist.items(), key=lambda kv: (kv[1], kv[0])):
        if s == e or inv[s] < s:
            continue
        if connectivity_graph(G, e, s, r).disconnected:
            out.append(s)
    return out


def iter_local_2separators(G: Graph, r: int) -> Iterator[LocalSeparator]:
    """All r-local 2-separators as unordered pairs; Cayley graphs use translates of {identity, s}."""
    if isinstance(G, CayleyGraph):
        mul = G.group.mul
        seen: set[tuple[int, int]] = set()
        for s in separator_representatives(G, r):
            for gamma in G.vertices():
                a, b = gamma, mul[gamma][s]
                key = (min(a, b), max(a, b))
                if key in seen:
                    continue
                seen.add(key)
                yield _pair_separator(G, key[0], key[1], r)
        return
    for a in G.vertices():
        for b, d in sorted(G.bfs(a, limit=r // 2).items()):
            if b > a and 2 * d <= r:
                sep = _pair_separator(G, a, b, r)
                if sep is not None:
                    yield sep


def find_local_2separators(G: Graph, r: int, include_cutvertices: bool = True) -> list[LocalSeparator]:
    """Every r-local cutvertex (kind "cutvertex") followed by every r-local 2-separator (kind "pair")."""
    out: list[LocalSeparator] = []
    if include_cutvertices:
        out.extend(LocalSeparator("cutvertex", (v,), r) for v in local_cutvertices(G, r))
    out.extend(iter_local_2separators(G, r))
    return out


def first_local_separator(G: Graph, r: int) -> Optional[LocalSeparator]:
    """A witness for "some r-local separator of size at most two", cutvertices first."""
    cut = local_cutvertices(G, r)
    if cut:
        return LocalSeparator("cutvertex", (cut[0],), r)
    if isinstance(G, CayleyGraph):
        reps = separator_representatives(G, r)
        if reps:
            return _pair_separator(G, G.identity, reps[0], r)
        return None
    return next(iter_local_2separators(G, r), None)


# --------------------------------------------------------------- separations


@dataclass(frozen=True)
class LocalSeparation:
    separator: tuple[int, int]
    A: frozenset[int]
    B: frozenset[int]
    r: int
    isolated: frozenset[int] = frozenset()

    def side(self, v: int) -> str:
        if v in self.separator:
            return "X"
        if v in self.A:
            return "A"
        if v in self.B:
            return "B"
        raise KeyError(f"vertex {v} is not in X or N(X)")

    def opposite(self, u: int, v: int) -> bool:
        su, sv = self.side(u), self.side(v)
        return {su, sv} == {"A", "B"}

    def same_side(self, u: int, v: int) -> bool:
        su, sv = self.side(u), self.side(v)
        return su == sv and su != "X"

    def swapped(self) -> "LocalSeparation":
        return LocalSeparation(self.separator, self.B, self.A, self.r, self.isolated)

    def as_dict(self, G: Optional[Graph] = None) -> dict:
        name = (lambda v: G.names[v]) if G is not None else str
        return {"A": sorted(name(v) for v in self.A - set(self.separator)),
                "B": sorted(name(v) for v in self.B - set(self.separator))}


def separations_from_components(X: tuple[int, int], components: tuple[frozenset[int], ...], r: int,
                                isolated: frozenset[int] = frozenset()) -> list[LocalSeparation]:
    """All 2^(c-1) - 1 bipartitions; the component holding the least N(X) vertex goes to A."""
    c = len(components)
    if c < 2:
        raise NotASeparator(f"{X} has a connected connectivity graph")
    comps = sorted(components, key=min)
    xs = frozenset(X)
    out = []
    for mask in range(2 ** (c - 1) - 1):
        a_side = set(comps[0])
        b_side: set[int] = set()
        for i, comp in enumerate(comps[1:]):
            (a_side if mask >> i & 1 else b_side).update(comp)
        out.append(LocalSeparation(tuple(X), xs | a_side, xs | b_side, r, isolated))
    return out


def local_2separations(G: Graph, X: Iterable[int], r: int) -> list[LocalSeparation]:
    v0, v1 = tuple(X)
    if not is_local_2separator(G, v0, v1, r):
        raise NotASeparator(f"{{{v0}, {v1}}} is not an {r}-local 2-separator")
    cg = connectivity_graph(G, v0, v1, r)
    return separations_from_components(cg.pair, cg.components, r, cg.isolated)
