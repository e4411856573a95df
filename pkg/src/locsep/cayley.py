"""Labelled graphs, Cayley graphs, closed-walk balls, walks and girth."""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .groups import GenSet, Group, validate_genset
from .words import Alphabet, Letter, as_word

INF = math.inf


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(eq=False, repr=False)
class Graph:
    """Simple undirected graph on 0..n-1 with labelled arc orientations.

    ``arcs[(u, v)]`` is the set of labels under which one may step from u to v;
    an undirected edge {u, v} carries both orientations.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = ()
    arcs: Mapping[tuple[int, int], frozenset] = field(default_factory=dict)
    label: str = "graph"

    def __post_init__(self):
        if not self.names:
            self.names = tuple(str(i) for i in range(self.n))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] = (), label: str = "graph",
                   arcs: Optional[Mapping[tuple[int, int], Iterable]] = None) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        arc_map = {k: frozenset(v) for k, v in (arcs or {}).items()}
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), tuple(names), arc_map, label)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label}, n={self.n}, m={self.num_edges})"

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def labels(self, u: int, v: int) -> frozenset:
        return self.arcs.get((u, v), frozenset())

    def bfs(self, source: int, limit: Optional[int] = None, removed: Iterable[int] = ()) -> dict[int, int]:
        """Distances from source, optionally truncated at ``limit`` and avoiding ``removed``."""
        removed = set(removed)
        dist = {source: 0}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            d = dist[x]
            if limit is not None and d >= limit:
                continue
            for y in self.adj[x]:
                if y not in dist and y not in removed:
                    dist[y] = d + 1
                    queue.append(y)
        return dist

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.bfs(0)) == self.n

    def to_json(self) -> dict:
        def lab(u, v):
            return sorted(str(x) for x in self.labels(u, v))

        return {"vertices": list(self.names), "edges": [[u, v, lab(u, v)] for u, v in self.edges()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(eq=False, repr=False)
class CayleyGraph(Graph):
    group: Optional[Group] = field(default=None, repr=False)
    gens: Optional[GenSet] = None

    def act(self, gamma: int, obj):
        """Image of a vertex, edge, collection or ball under left multiplication by gamma."""
        mul = self.group.mul
        if isinstance(obj, int):
            return mul[gamma][obj]
        if isinstance(obj, BallSubgraph):
            return BallSubgraph(
                mul[gamma][obj.center], obj.r,
                frozenset(mul[gamma][x] for x in obj.vertices),
                frozenset(edge_key(mul[gamma][a], mul[gamma][b]) for a, b in obj.edges),
            )
        if isinstance(obj, frozenset):
            return frozenset(self.act(gamma, x) for x in obj)
        if isinstance(obj, set):
            return {self.act(gamma, x) for x in obj}
        if isinstance(obj, tuple):
            return tuple(self.act(gamma, x) for x in obj)
        if isinstance(obj, list):
            return [self.act(gamma, x) for x in obj]
        raise TypeError(f"cannot act on {type(obj).__name__}")

    @property
    def identity(self) -> int:
        return self.group.identity

    def step(self, v: int, s: int) -> int:
        return self.group.mul[v][s]


def build(group: Group, gens: Iterable[int], label: Optional[str] = None) -> CayleyGraph:
    """Cayley graph with edges {x, xs}; arc (x, xs) carries label s."""
    gs = gens if isinstance(gens, GenSet) else validate_genset(group, gens)
    nbrs: list[set[int]] = [set() for _ in range(group.order)]
    arcs: dict[tuple[int, int], set[int]] = {}
    for x in group.elements():
        for s in gs:
            y = group.mul[x][s]
            nbrs[x].add(y)
            arcs.setdefault((x, y), set()).add(s)
    gen_names = ",".join(group.names[s] for s in gs)
    return CayleyGraph(
        group.order,
        tuple(tuple(sorted(s)) for s in nbrs),
        group.names,
        {k: frozenset(v) for k, v in arcs.items()},
        label or f"Cay({group.label};{gen_names})",
        group,
        gs,
    )


# --------------------------------------------------------------------- balls


@dataclass(frozen=True)
class BallSubgraph:
    center: int
    r: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def adjacency(self, removed: Iterable[int] = ()) -> dict[int, list[int]]:
        removed = set(removed)
        adj: dict[int, list[int]] = {v: [] for v in self.vertices if v not in removed}
        for a, b in self.edges:
            if a in adj and b in adj:
                adj[a].append(b)
                adj[b].append(a)
        return adj

    def components(self, removed: Iterable[int] = ()) -> list[frozenset[int]]:
        """Components of the ball after deleting the given vertices (and their edges)."""
        adj = self.adjacency(removed)
        seen: set[int] = set()
        out = []
        for s in sorted(adj):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def issubgraph(self, other: "BallSubgraph") -> bool:
        return self.vertices <= other.vertices and self.edges <= other.edges


def ball(G: Graph, v: int, r: int) -> BallSubgraph:
    """Vertices and edges on closed walks of length at most r through v.

    A vertex u qualifies iff 2 d(v, u) <= r; an edge ab iff d(v, a) + d(v, b) + 1 <= r.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    dist = G.bfs(v, limit=r // 2)
    verts = frozenset(u for u, d in dist.items() if 2 * d <= r)
    edges = set()
    for a in verts:
        da = dist[a]
        for b in G.adj[a]:
            if a < b and b in dist and da + dist[b] + 1 <= r:
                edges.add((a, b))
    return BallSubgraph(v, r, verts, frozenset(edges))


def closed_walk_profile(G: Graph, v: int, r_max: int) -> tuple[dict[int, int], dict[tuple[int, int], int]]:
    """Brute force: the shortest closed walk from v (length <= r_max) visiting each vertex / edge.

    Enumerates every closed walk starting at v explicitly; walks are pruned only
    when they can no longer return within the budget.
    """
    back = G.bfs(v)
    best_v: dict[int, int] = {v: 0}
    best_e: dict[tuple[int, int], int] = {}
    path_v = [v]
    path_e: list[tuple[int, int]] = []

    def record(length: int):
        for x in path_v:
            if best_v.get(x, INF) > length:
                best_v[x] = length
        for e in path_e:
            if best_e.get(e, INF) > length:
                best_e[e] = length

    def dfs(x: int, length: int):
        for y in G.adj[x]:
            nl = length + 1
            if nl + back.get(y, INF) > r_max:
                continue
            path_v.append(y)
            path_e.append(edge_key(x, y))
            if y == v:
                record(nl)
            dfs(y, nl)
            path_v.pop()
            path_e.pop()

    dfs(v, 0)
    return best_v, best_e


def ball_by_walks(G: Graph, v: int, r: int, profile=None) -> BallSubgraph:
    best_v, best_e = profile if profile is not None else closed_walk_profile(G, v, r)
    return BallSubgraph(
        v, r,
        frozenset(x for x, d in best_v.items() if d <= r),
        frozenset(e for e, d in best_e.items() if d <= r),
    )


def cached_ball(G: Graph, v: int, r: int) -> BallSubgraph:
    """ball() memoised on the graph object; graphs are immutable after construction."""
    cache = G.__dict__.setdefault("_ball_cache", {})
    key = (v, r)
    out = cache.get(key)
    if out is None:
        out = cache[key] = ball(G, v, r)
    return out


def neighbourhood(G: Graph, xs: Iterable[int]) -> frozenset[int]:
    """N(X): vertices outside X adjacent to some vertex of X."""
    xs = set(xs)
    return frozenset(y for x in xs for y in G.adj[x] if y not in xs)


def is_cycle_graph(G: Graph) -> bool:
    return G.n >= 3 and all(len(a) == 2 for a in G.adj) and G.is_connected()


# ----------------------------------------------------------- metric helpers


def distance(G: Graph, u: int, v: int):
    """BFS distance, or math.inf when v is unreachable from u."""
    return G.bfs(u).get(v, INF)


def girth(G: Graph, limit: Optional[int] = None, roots: Optional[Iterable[int]] = None):
    """Length of a shortest cycle (math.inf for forests).

    Cayley graphs are vertex-transitive, so one root suffices there.
    """
    if roots is None:
        roots = [G.group.identity] if isinstance(G, CayleyGraph) else range(G.n)
    best = INF
    for root in roots:
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in G.adj[x]:
                if y == parent[x]:
                    continue
                if y in dist:
                    best = min(best, dist[x] + dist[y] + 1)
                else:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
        if limit is not None and best <= limit:
            break
    return best


# -------------------------------------------------------------------- walks


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]
    labels: tuple = ()

    def __len__(self) -> int:
        return len(self.vertices) - 1

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def is_backtracking(self) -> bool:
        vs = self.vertices
        return any(vs[i] == vs[i + 2] for i in range(len(vs) - 2))

    def is_cycle(self) -> bool:
        """Closed, length >= 3, no repeated vertices except the ends."""
        vs = self.vertices
        return self.closed and len(vs) >= 4 and len(set(vs[:-1])) == len(vs) - 1

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [edge_key(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def is_walk_in(self, G: Graph) -> bool:
        vs = self.vertices
        return all(G.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def __add__(self, other: "Walk") -> "Walk":
        if self.end != other.start:
            raise ValueError("walks do not meet")
        return Walk(self.vertices + other.vertices[1:], self.labels + other.labels)


def find_cycle_in_walk(W: Walk) -> Walk:
    """Shortest nontrivial closed subwalk; for a non-backtracking closed walk it is a cycle."""
    if not W.closed or W.length == 0:
        raise ValueError("need a nontrivial closed walk")
    if W.is_backtracking():
        raise ValueError("walk backtracks")
    last: dict[int, int] = {}
    best = None
    for j, v in enumerate(W.vertices):
        if v in last and (best is None or j - last[v] < best[1] - best[0]):
            best = (last[v], j)
        last[v] = j
    i, j = best
    sub = Walk(W.vertices[i:j + 1], W.labels[i:j] if W.labels else ())
    if not sub.is_cycle():
        raise AssertionError(f"minimal closed subwalk {sub.vertices} is not a cycle")
    return sub


def walk_of_word(G: CayleyGraph, start: int, w, labeling: Mapping[str, int],
                 involutions: Iterable[str] = ()) -> Walk:
    """Walk from ``start`` reading the letters of w as right multiplications."""
    alph = Alphabet(frozenset(involutions), dict(labeling), G.group)
    word = as_word(w, alph)
    gens = set(G.gens)
    verts = [start]
    labs: list[Letter] = []
    for a in word:
        s = alph.letter_value(a)
        if s not in gens:
            raise ValueError(f"letter {a} evaluates to {G.group.names[s]}, which is not a generator")
        verts.append(G.group.mul[verts[-1]][s])
        labs.append(a)
    return Walk(tuple(verts), tuple(labs))


def induced_components(G: Graph, vertices: Iterable[int]) -> list[frozenset[int]]:
    """Components of the subgraph induced on ``vertices``."""
    vs = set(vertices)
    seen: set[int] = set()
    out = []
    for s in sorted(vs):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.adj[x]:
                if y in vs and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out
