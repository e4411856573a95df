"""Crossing of local 2-separations, decided by a parity-labelled breadth-first search."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

from ..cayley import CayleyGraph, Graph, Walk
from .report import FAIL, PASS, Check, skipped
from .separators import (LocalSeparation, LocalSeparator, find_local_2separators, local_2separations,
                         local_cutvertices)
from .traversal import traversal_profile


def crossing_walk(G: Graph, pair: Iterable[int], separation: LocalSeparation, r: int) -> Optional[Walk]:
    """A u-v walk of length <= r/2 traversing {A, B} oddly, or None.

    Outside X a state is (vertex, parity); inside X it also records the side
    of the N(X) vertex the walk entered from. Leaving X to w flips the parity
    iff side(w) differs from that entry side.
    """
    u, v = tuple(pair)
    X = set(separation.separator)
    if u in X or v in X:
        raise ValueError("the pair must avoid the separator")
    budget = r // 2
    start = (u, 0, None)
    parent: dict[tuple, Optional[tuple]] = {start: None}
    depth = {start: 0}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        x, parity, entry = state
        if x == v and parity == 1:
            path = []
            s: Optional[tuple] = state
            while s is not None:
                path.append(s[0])
                s = parent[s]
            return Walk(tuple(reversed(path)))
        d = depth[state]
        if d >= budget:
            continue
        for y in G.adj[x]:
            if x in X:
                if y in X:
                    nxt = (y, parity, entry)
                else:
                    flip = separation.side(y) != entry
                    nxt = (y, parity ^ flip, None)
            else:
                nxt = (y, parity, separation.side(x)) if y in X else (y, parity, None)
            if nxt not in depth:
                depth[nxt] = d + 1
                parent[nxt] = state
                queue.append(nxt)
    return None


def crosses(G: Graph, pair: Iterable[int], separation: LocalSeparation, r: Optional[int] = None) -> bool:
    return crossing_walk(G, pair, separation, separation.r if r is None else r) is not None


def crosses_by_enumeration(G: Graph, pair: Iterable[int], separation: LocalSeparation, r: int) -> bool:
    """Oracle: enumerate every u-v walk of length <= r/2 and count traversals directly."""
    u, v = tuple(pair)
    budget = r // 2
    path = [u]

    def dfs() -> bool:
        x = path[-1]
        if x == v and traversal_profile(Walk(tuple(path)), separation, cyclic=False).odd:
            return True
        if len(path) - 1 >= budget:
            return False
        for y in G.adj[x]:
            path.append(y)
            if dfs():
                return True
            path.pop()
        return False

    return dfs()


def _near_separator(G: Graph, X: Sequence[int], radius: int) -> dict[int, int]:
    dist: dict[int, int] = {}
    for x in X:
        for y, d in G.bfs(x, limit=radius).items():
            if d < dist.get(y, radius + 1):
                dist[y] = d
    return dist


def separator_crosses(G: Graph, Y: Iterable[int], X: Iterable[int], r: int,
                      separations: Optional[list[LocalSeparation]] = None) -> bool:
    """The pair Y crosses some r-local 2-separation with separator X."""
    Y, X = tuple(Y), tuple(X)
    if set(Y) & set(X):
        return False
    seps = separations if separations is not None else local_2separations(G, X, r)
    return any(crosses(G, Y, s, r) for s in seps)


def crossing_candidates(G: Graph, X: Sequence[int], separators: Iterable[LocalSeparator], r: int):
    """Separators Y disjoint from X whose vertices could be joined through X within r/2 steps."""
    budget = r // 2
    near = _near_separator(G, X, budget)
    for Y in separators:
        if Y.kind != "pair" or set(Y.vertices) & set(X):
            continue
        a, b = Y.vertices
        if a in near and b in near and near[a] + near[b] <= budget:
            yield Y


def crossing_separators(G: Graph, X: Iterable[int], r: int,
                        separators: Optional[list[LocalSeparator]] = None) -> list[tuple[int, int]]:
    X = tuple(X)
    seps = separators if separators is not None else find_local_2separators(G, r, include_cutvertices=False)
    separations = local_2separations(G, X, r)
    return [Y.vertices for Y in crossing_candidates(G, X, seps, r)
            if separator_crosses(G, Y.vertices, X, r, separations)]


def is_totally_nested(G: Graph, X: Iterable[int], r: int, separators: Optional[list[LocalSeparator]] = None) -> bool:
    """No other r-local 2-separator crosses X."""
    X = tuple(X)
    seps = separators if separators is not None else find_local_2separators(G, r, include_cutvertices=False)
    separations = local_2separations(G, X, r)
    for Y in crossing_candidates(G, X, seps, r):
        if separator_crosses(G, Y.vertices, X, r, separations):
            return False
    return True


def crossing_symmetry_check(G: Graph, r: int, separators: Optional[list[LocalSeparator]] = None,
                            roots: Optional[Iterable[int]] = None) -> Check:
    """Y crosses X iff X crosses Y, for every pair of separators (X restricted to ``roots`` if given).

    Asserted only for graphs without r-local cutvertices; on a short cycle the
    relation is genuinely one-sided.
    """
    if local_cutvertices(G, r):
        return skipped("crossing-symmetry", "no r-local cutvertex")
    seps = separators if separators is not None else find_local_2separators(G, r, include_cutvertices=False)
    pairs = [s for s in seps if s.kind == "pair"]
    if roots is None and isinstance(G, CayleyGraph):
        roots = [G.identity]
    anchors = [s for s in pairs if roots is None or set(s.vertices) & set(roots)]
    cache: dict[tuple, list[LocalSeparation]] = {}

    def seps_of(X):
        if X not in cache:
            cache[X] = local_2separations(G, X, r)
        return cache[X]

    checked = 0
    budget = r // 2
    for X in anchors:
        near_x = _near_separator(G, X.vertices, budget)
        for Y in pairs:
            if set(Y.vertices) & set(X.vertices):
                continue
            y0, y1 = Y.vertices
            if near_x.get(y0, budget + 1) + near_x.get(y1, budget + 1) > budget:
                # no y0-y1 walk within budget passes through X; crossing in either direction needs
                # a walk of length <= r/2 joining two separator vertices through the other separator
                near_y = _near_separator(G, Y.vertices, budget)
                x0, x1 = X.vertices
                if near_y.get(x0, budget + 1) + near_y.get(x1, budget + 1) > budget:
                    continue
            checked += 1
            a = separator_crosses(G, Y.vertices, X.vertices, r, seps_of(X.vertices))
            b = separator_crosses(G, X.vertices, Y.vertices, r, seps_of(Y.vertices))
            if a != b:
                return Check("crossing-symmetry", FAIL, {"X": list(X.vertices), "Y": list(Y.vertices),
                                                         "Y crosses X": a, "X crosses Y": b}, checked=checked)
    return Check("crossing-symmetry", PASS, checked=checked)
