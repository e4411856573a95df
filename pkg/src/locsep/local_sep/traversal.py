"""Traversals of local 2-separators and separations by walks and cycles."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from ..cayley import Graph, Walk, cached_ball, edge_key
from .report import FAIL, PASS, SKIPPED, Check
from .separators import ConnectivityGraph, LocalSeparation, connectivity_graph

Target = Union[ConnectivityGraph, LocalSeparation]


@dataclass(frozen=True)
class TraversalProfile:
    count: int
    traversals: tuple[tuple[int, int], ...]
    weak_at: frozenset[int]
    strong: bool

    @property
    def odd(self) -> bool:
        return self.count % 2 == 1

    @property
    def weak(self) -> bool:
        return bool(self.weak_at)


def _separator_of(target: Target) -> tuple[int, int]:
    return target.pair if isinstance(target, ConnectivityGraph) else target.separator


def _ends_traverse(target: Target, a: int, b: int) -> bool:
    if isinstance(target, ConnectivityGraph):
        cm = target.component_map()
        return cm.get(a, -1) != cm.get(b, -2)
    return target.opposite(a, b)


def traversal_profile(W: Walk, target: Target, cyclic: Optional[bool] = None) -> TraversalProfile:
    """Scan the maximal runs of W inside X.

    A run with bounding vertices a, b outside X is a traversal when a and b lie
    in distinct local components (separator target) or on opposite sides
    (separation target). Closed walks are read cyclically unless told otherwise.
    """
    X = set(_separator_of(target))
    vs = list(W.vertices)
    if cyclic is None:
        cyclic = W.closed and W.length > 0
    if cyclic:
        vs = vs[:-1]
        n = len(vs)
        starts = [i for i in range(n) if vs[i] not in X]
        if not starts:
            return TraversalProfile(0, (), frozenset(), False)
        # rotate so that index 0 lies outside X; runs then never wrap
        k = starts[0]
        order = [(k + j) % n for j in range(n)] + [k]
    else:
        order = list(range(len(vs)))
    seq = [vs[i] for i in order]
    found = []
    weak_at: set[int] = set()
    strong = False
    i = 0
    while i < len(seq) - 1:
        if seq[i] in X or seq[i + 1] not in X:
            i += 1
            continue
        j = i + 1
        while j < len(seq) and seq[j] in X:
            j += 1
        if j == len(seq):
            break
        internal = j - i - 1
        if _ends_traverse(target, seq[i], seq[j]):
            found.append((order[i], internal))
            if internal == 1:
                weak_at.add(seq[i + 1])
            elif internal == 2:
                strong = True
        i = j
    return TraversalProfile(len(found), tuple(found), frozenset(weak_at), strong)


# --------------------------------------------------------------- cycles


def cycles_through(G: Graph, roots: Iterable[int], max_len: int, limit: Optional[int] = None) -> list[Walk]:
    """All cycles of length <= max_len through at least one root, each listed once."""
    roots = list(roots)
    seen: set[frozenset] = set()
    out: list[Walk] = []
    for idx, root in enumerate(roots):
        banned = set(roots[:idx])  # cycles through earlier roots were already listed
        back = G.bfs(root, limit=max_len // 2 + 1, removed=banned)
        path = [root]
        on_path = {root}

        def dfs(x: int) -> bool:
            for y in G.adj[x]:
                if y in banned:
                    continue
                if y == root and len(path) >= 3:
                    key = frozenset(edge_key(path[i], path[i + 1]) for i in range(len(path) - 1)) | {edge_key(x, root)}
                    if key not in seen:
                        seen.add(key)
                        out.append(Walk(tuple(path) + (root,)))
                        if limit is not None and len(out) >= limit:
                            return True
                    continue
                if y in on_path or len(path) + back.get(y, max_len + 1) > max_len:
                    continue
                path.append(y)
                on_path.add(y)
                if dfs(y):
                    return True
                path.pop()
                on_path.discard(y)
            return False

        if dfs(root):
            break
    return out


def sample_cycles(G: Graph, roots: Iterable[int], min_len: int, max_len: int, samples: int,
                  seed: int = 0, attempts: int = 20) -> list[Walk]:
    """Cycles with min_len < length <= max_len through a root, found by random non-backtracking walks."""
    rng = random.Random(seed)
    roots = list(roots)
    out: list[Walk] = []
    seen: set[frozenset] = set()
    for _ in range(samples * attempts):
        if len(out) >= samples:
            break
        root = rng.choice(roots)
        path = [root]
        pos = {root: 0}
        prev = None
        while len(path) <= max_len:
            x = path[-1]
            choices = [y for y in G.adj[x] if y != prev]
            if not choices:
                break
            y = rng.choice(choices)
            if y in pos:
                cyc = path[pos[y]:] + [y]
                length = len(cyc) - 1
                if y == root and min_len < length <= max_len:
                    key = frozenset(edge_key(cyc[i], cyc[i + 1]) for i in range(length))
                    if key not in seen:
                        seen.add(key)
                        out.append(Walk(tuple(cyc)))
                break
            prev = x
            pos[y] = len(path)
            path.append(y)
    return out


def short_cycles(G: Graph, X: Iterable[int], r: int, exhaustive_len: int = 12, samples: int = 200,
                 seed: int = 0) -> tuple[list[Walk], bool]:
    """Cycles of length <= r through X; returns (cycles, exhaustive?)."""
    X = list(X)
    cap = min(r, exhaustive_len)
    cycles = cycles_through(G, X, cap)
    if r <= exhaustive_len:
        return cycles, True
    return cycles + sample_cycles(G, X, cap, r, samples, seed), False


# ------------------------------------------------------------------ checks


def parity_lemma_check(G: Graph, separation: LocalSeparation, x: int, samples: int = 500, seed: int = 0) -> Check:
    """a, b in N(X) are on opposite sides iff an a-b walk inside B_r(x) traverses {A, B} oddly."""
    r = separation.r
    B = cached_ball(G, x, r)
    adj = B.adjacency()
    nx = sorted((separation.A | separation.B) - set(separation.separator))
    starts = [v for v in nx if v in adj]
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        a = rng.choice(starts)
        walk = [a]
        length = rng.randint(1, 2 * r)
        for _ in range(length):
            nbrs = adj[walk[-1]]
            if not nbrs:
                break
            walk.append(rng.choice(nbrs))
        ends = [i for i, v in enumerate(walk) if i > 0 and v in separation.A | separation.B
                and v not in separation.separator]
        if not ends:
            continue
        W = Walk(tuple(walk[:ends[-1] + 1]))
        prof = traversal_profile(W, separation, cyclic=False)
        checked += 1
        if prof.odd != separation.opposite(W.start, W.end):
            return Check("parity-lemma", FAIL, {"walk": list(W.vertices), "count": prof.count}, checked=checked)
    return Check("parity-lemma", PASS, checked=checked)


def cycle_weak_traversal_check(G: Graph, separation: LocalSeparation, r: Optional[int] = None,
                               exhaustive_len: int = 12, samples: int = 200, seed: int = 0) -> Check:
    """A cycle of length <= r weakly traversing {A, B} at one vertex of X does so at both."""
    r = separation.r if r is None else r
    X = separation.separator
    cycles, exhaustive = short_cycles(G, X, r, exhaustive_len, samples, seed)
    for O in cycles:
        prof = traversal_profile(O, separation)
        if prof.weak and prof.weak_at != frozenset(X):
            return Check("cycle-weak-traversal", FAIL, {"cycle": list(O.vertices), "weak_at": sorted(prof.weak_at)},
                         checked=len(cycles))
    note = "exhaustive" if exhaustive else f"exhaustive to length {exhaustive_len}, sampled beyond"
    return Check("cycle-weak-traversal", PASS if cycles else SKIPPED, note=note, checked=len(cycles))


def strong_traversal_check(G: Graph, X: Iterable[int], r: int, exhaustive_len: int = 12, samples: int = 200,
                           seed: int = 0) -> Check:
    """No cycle of length <= r strongly traverses the r-local 2-separator X."""
    v0, v1 = tuple(X)
    cg = connectivity_graph(G, v0, v1, r)
    if not cg.disconnected:
        return Check("strong-traversal", SKIPPED, note="not a local 2-separator")
    cycles, exhaustive = short_cycles(G, (v0, v1), r, exhaustive_len, samples, seed)
    for O in cycles:
        if traversal_profile(O, cg).strong:
            return Check("strong-traversal", FAIL, {"cycle": list(O.vertices)}, checked=len(cycles))
    note = "exhaustive" if exhaustive else f"exhaustive to length {exhaustive_len}, sampled beyond"
    return Check("strong-traversal", PASS, note=note, checked=len(cycles))


def element_traverses_at(G, cg: ConnectivityGraph, g: int, x: int) -> bool:
    """The g^2-labelled walk x g^-1, x, x g is a traversal of X."""
    mul, inv = G.group.mul, G.group.inv
    a, b = mul[x][inv[g]], mul[x][g]
    X = set(cg.pair)
    if a in X or b in X:
        return False
    cm = cg.component_map()
    return cm[a] != cm[b]


def word_walks_traverse(G, target: Target, word: list[int], strongly: Optional[bool] = None) -> bool:
    """Some walk labelled by ``word`` (group elements) traverses the target (weakly/strongly if asked)."""
    mul = G.group.mul
    for start in G.vertices():
        vs = [start]
        for s in word:
            vs.append(mul[vs[-1]][s])
        prof = traversal_profile(Walk(tuple(vs)), target, cyclic=False)
        if strongly is None and prof.count:
            return True
        if strongly is True and prof.strong:
            return True
        if strongly is False and prof.weak:
            return True
    return False
