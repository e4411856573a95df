"""Corpus runs: the theorem equivalence, the lemma suites, girth search and single-graph analysis.

Reports are plain JSON-ready dicts. Everything that varies between runs
(wall-clock time, timestamps) lives under the "meta" key, so two runs with the
same inputs produce identical JSON once "meta" is dropped.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Optional

from . import words
from .cayley import CayleyGraph, Graph, build, girth
from .cover import default_half_width, ends_separated, ladder_window, path_window, verify_covering_window
from .groups import (GenSet, Group, GensetError, SpecError, cycle_notation, cyclic_product_decomposition,
                     inverse_closure, make_alternating, nilpotency_class, parse_group_spec, perm_compose,
                     perm_inverse, perm_parity, validate_genset)
from .local_sep.crossing import crossing_symmetry_check, crossing_separators, is_totally_nested
from .local_sep.insertion import InconsistencyError, edge_insertion, insertion_preconditions
from .local_sep.lemmas import (downward_locality_check, involution_suite, non_involution_suite,
                               orbit_closure_check, section_lemma_suite)
from .local_sep.quotient import loc2sep_to_cutvertex_check
from .local_sep.report import FAIL, PASS, SKIPPED, Check, combine, skipped
from .local_sep.separators import (connectivity_graph, find_local_2separators, first_local_separator, is_local_2separator,
                                   is_local_cutvertex, local_2separations, local_cutvertices,
                                   separator_representatives)
from .local_sep.traversal import cycle_weak_traversal_check, parity_lemma_check, strong_traversal_check

THEOREM_R = 20


# ------------------------------------------------------------ generating sets


@dataclass
class GensetChoice:
    gensets: list[GenSet]
    exhaustive: bool
    strategy: str


def _split_list(body: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in body:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def _element(group: Group, token: str, spec: str) -> int:
    if token.isdigit():
        x = int(token)
        if x >= group.order:
            raise SpecError(f"element index {x} out of range", spec, spec.find(token))
        return x
    if token in group.names:
        return group.names.index(token)
    raise SpecError(f"unknown element {token!r}", spec, max(spec.find(token), 0))


def inverse_classes(group: Group) -> list[tuple[int, ...]]:
    out = []
    for x in group.elements():
        if x == group.identity:
            continue
        y = group.inv[x]
        if x <= y:
            out.append((x,) if x == y else (x, y))
    return out


def all_pair_gensets(group: Group, k: int) -> list[GenSet]:
    """Every inverse-closed generating set made of at most k classes {s, s^-1}."""
    classes = inverse_classes(group)
    out = []
    for size in range(1, min(k, len(classes)) + 1):
        for combo in itertools.combinations(classes, size):
            elems = frozenset(itertools.chain.from_iterable(combo))
            if len(group.closure(elems)) == group.order:
                out.append(GenSet(group, elems))
    return out


def parse_genset(group: Group, spec: str, max_pairs: Optional[int] = None) -> GensetChoice:
    """"standard", "explicit:[a,b,...]" (inverses added) or "all-pairs:k"."""
    spec = spec.strip()
    if spec == "standard":
        return GensetChoice([validate_genset(group, group.standard_gens)], False, spec)
    kind, _, arg = spec.partition(":")
    if kind == "explicit":
        body = arg.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise SpecError("expected explicit:[...]", spec, len(kind) + 1)
        elems = [_element(group, t, spec) for t in _split_list(body[1:-1])]
        return GensetChoice([validate_genset(group, inverse_closure(group, elems))], False, spec)
    if kind == "all-pairs":
        if not arg.isdigit():
            raise SpecError("expected all-pairs:<k>", spec, len(kind) + 1)
        k = int(arg) if max_pairs is None else max_pairs
        exhaustive = k >= len(inverse_classes(group))
        return GensetChoice(all_pair_gensets(group, k), exhaustive, f"all-pairs:{k}")
    raise SpecError(f"unknown generating-set strategy {kind!r}", spec, 0)


def genset_names(gs: Iterable[int], group: Group) -> list[str]:
    return [group.names[x] for x in sorted(gs)]


# ---------------------------------------------------------------- theorem run


@dataclass
class CorpusEntry:
    spec: str
    genset: str = "standard"
    r: Optional[int] = None

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusEntry":
        return cls(d["spec"], d.get("genset", "standard"), d.get("r"))


def default_corpus() -> list[CorpusEntry]:
    out = [CorpusEntry(f"cyclic:{n}") for n in range(21, 27)]
    out += [CorpusEntry(f"product:cyclic:{i},cyclic:2") for i in range(21, 25)]
    for spec in ("product:cyclic:5,cyclic:5", "product:cyclic:3,cyclic:9", "product:cyclic:4,cyclic:8",
                 "product:cyclic:2,cyclic:2,cyclic:8", "product:quaternion:8,cyclic:4", "heisenberg:3"):
        out.append(CorpusEntry(spec, "all-pairs:2"))
    # the last two abelian-or-class-2 groups need three generators, so two pairs test nothing
    out.append(CorpusEntry("product:cyclic:2,cyclic:2,cyclic:8", "all-pairs:3"))
    out.append(CorpusEntry("product:quaternion:8,cyclic:4", "all-pairs:3"))
    out.append(CorpusEntry("alternating:5"))
    return out


def load_corpus(path: str) -> list[CorpusEntry]:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not data:
        raise ValueError("corpus file must hold a nonempty JSON array")
    return [CorpusEntry.from_dict(d) for d in data]


def _separator_witness(G: CayleyGraph, r: int) -> Optional[dict]:
    sep = first_local_separator(G, r)
    if sep is None:
        return None
    names = G.group.names
    return {
        "kind": sep.kind,
        "vertices": list(sep.vertices),
        "vertex_names": [names[v] for v in sep.vertices],
        "generators": genset_names(G.gens, G.group),
    }


def _window_result(i: int, j: int, r: int) -> dict:
    L = default_half_width(i, r)
    W = path_window(i, L) if j == 1 else ladder_window(i, L)
    check = verify_covering_window(W, r=r)
    sep = ends_separated(W, j, r)
    out = {"family": "path" if j == 1 else "ladder", "i": i, "L": L, "verification": check.as_dict(),
           "ends_separator": None, "projects_to_local_separator": False}
    if sep is not None:
        image = sorted({W.projection[v] for v in sep})
        base = W.base
        local = (is_local_cutvertex(base, image[0], r) if len(image) == 1
                 else is_local_2separator(base, image[0], image[1], r))
        out["ends_separator"] = [W.graph.names[v] for v in sep]
        out["projects_to_local_separator"] = local
    out["passed"] = check.passed and sep is not None and out["projects_to_local_separator"]
    return out


def evaluate_entry(entry: CorpusEntry, r: Optional[int] = None, max_pairs: Optional[int] = None,
                   windows: bool = True) -> dict:
    """Statements (ii) and (iii) for one group, plus the covering window when (iii) holds."""
    r = entry.r if r is None else r
    r = THEOREM_R if r is None else r
    group = parse_group_spec(entry.spec)
    choice = parse_genset(group, entry.genset, max_pairs)
    nil = nilpotency_class(group)
    flags = []
    if not nil.nilpotent:
        flags.append("not nilpotent: contrast class, theorem does not apply")
    elif r < max(4 ** (nil.klass + 1), 20):
        flags.append(f"r < max(4^(n+1), 20) = {max(4 ** (nil.klass + 1), 20)} for class n = {nil.klass}")
    if not choice.exhaustive:
        flags.append("generating-set search not exhaustive")
    if not choice.gensets:
        flags.append(f"{choice.strategy} yields no generating set")

    witness = None
    tested = 0
    if group.order > r:
        for gs in choice.gensets:
            tested += 1
            G = build(group, gs)
            witness = _separator_witness(G, r)
            if witness is not None:
                break
    st2 = witness is not None
    decomp = cyclic_product_decomposition(group)
    st3 = decomp is not None and decomp[0] > r
    if not nil.nilpotent:
        agreement = "not applicable"
    elif st2 == st3:
        agreement = "agree"
    elif st3 and not choice.exhaustive:
        agreement = "inconclusive: generating-set search incomplete"
    else:
        agreement = "counterexample"
    out = {
        "spec": entry.spec,
        "label": group.label,
        "order": group.order,
        "genset": choice.strategy,
        "r": r,
        "nilpotency_class": nil.klass,
        "flags": flags,
        "statement2": {
            "value": st2,
            "verdict": "true" if st2 else ("false" if choice.exhaustive or group.order <= r
                                           else "false-on-tested-sets"),
            "witness": witness,
            "gensets_tested": tested,
            "gensets_available": len(choice.gensets),
            "exhaustive": choice.exhaustive,
        },
        "statement3": {"value": st3, "decomposition": list(decomp) if decomp else None},
        "agreement": agreement,
        "window": None,
    }
    if st3 and windows:
        out["window"] = _window_result(decomp[0], decomp[1], r)
    return out


def _evaluate_timed(args) -> tuple[dict, float]:
    t = time.perf_counter()
    res = evaluate_entry(*args)
    return res, time.perf_counter() - t


def _meta(timings: dict) -> dict:
    return {"timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"), "seconds": timings}


def run_theorem_corpus(corpus: Optional[list[CorpusEntry]] = None, r: Optional[int] = None,
                       max_pairs: Optional[int] = None, workers: int = 1, windows: bool = True) -> dict:
    corpus = default_corpus() if corpus is None else corpus
    if not corpus:
        raise ValueError("corpus is empty")
    jobs = [(e, r, max_pairs, windows) for e in corpus]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_evaluate_timed, jobs))
    else:
        results = [_evaluate_timed(j) for j in jobs]
    entries = [res for res, _ in results]
    summary = {
        "entries": len(entries),
        "agree": sum(e["agreement"] == "agree" for e in entries),
        "inconclusive": sum(e["agreement"].startswith("inconclusive") for e in entries),
        "counterexamples": sum(e["agreement"] == "counterexample" for e in entries),
        "not_applicable": sum(e["agreement"] == "not applicable" for e in entries),
        "window_failures": sum(bool(e["window"]) and not e["window"]["passed"] for e in entries),
    }
    summary["passed"] = summary["counterexamples"] == 0 and summary["window_failures"] == 0
    timings = {f"{i}:{e['spec']}:{e['genset']}": round(t, 3) for i, (e, t) in enumerate(results)}
    return {"kind": "theorem", "entries": entries, "summary": summary, "meta": _meta(timings)}


def verify_report(report: dict) -> list[str]:
    """Re-check every statement-(ii) witness from scratch; returns a list of problems."""
    problems = []
    for e in report.get("entries", []):
        w = e["statement2"]["witness"]
        if not e["statement2"]["value"]:
            continue
        if w is None:
            problems.append(f"{e['spec']}: true without witness")
            continue
        group = parse_group_spec(e["spec"])
        gens = [group.names.index(n) for n in w["generators"]]
        G = build(group, gens)
        vs = w["vertices"]
        ok = (is_local_cutvertex(G, vs[0], e["r"]) if w["kind"] == "cutvertex"
              else is_local_2separator(G, vs[0], vs[1], e["r"]))
        if not ok or group.order <= e["r"]:
            problems.append(f"{e['spec']}: witness {w['vertex_names']} does not re-verify")
    return problems


def canonical_json(report: dict, drop_meta: bool = False) -> str:
    data = {k: v for k, v in report.items() if not (drop_meta and k == "meta")}
    return json.dumps(data, sort_keys=True, indent=2)


# ------------------------------------------------------------- lemma suites


@dataclass
class LemmaInstance:
    spec: str
    genset: str
    r: int
    h: Optional[str] = None  # element spanning the separator {I, h} under study
    note: str = ""

    def build(self) -> CayleyGraph:
        group = parse_group_spec(self.spec)
        return build(group, parse_genset(group, self.genset).gensets[0])


LADDER_RUNG = "(g^0,g^1)"


def lemma_corpus() -> list[LemmaInstance]:
    return [
        LemmaInstance("cyclic:12", "standard", 11, note="12-cycle"),
        LemmaInstance("product:cyclic:12,cyclic:2", "standard", 11, LADDER_RUNG, "circular ladder CL_12"),
        LemmaInstance("product:cyclic:9,cyclic:2", "standard", 8, LADDER_RUNG, "circular ladder CL_9"),
        LemmaInstance("cyclic:25", "standard", 20, note="25-cycle"),
        LemmaInstance("product:cyclic:10,cyclic:2", "explicit:[(g^1,g^0),(g^1,g^1)]", 8, LADDER_RUNG,
                      "twisted ladder, separator at distance two"),
        LemmaInstance("cyclic:24", "explicit:[g^1,g^12]", 11, "g^12", "Moebius ladder"),
        LemmaInstance("cyclic:30", "explicit:[g^1,g^2]", 12, "g^1", "square of a 30-cycle"),
        LemmaInstance("product:cyclic:21,cyclic:2", "standard", 20, LADDER_RUNG, "circular ladder CL_21"),
        LemmaInstance("dihedral:12", "standard", 11, None, "prism over D_12 (not nilpotent)"),
        LemmaInstance("alternating:5", "presentation", 9, note="A_5, a^3 = b^2 = (ab)^5"),
    ]


INSERTION_CASES = [
    ("product:cyclic:24,cyclic:2", "standard", (4, 8, 20)),
    ("product:cyclic:12,cyclic:2", "standard", (4, 5, 11)),
    ("cyclic:30", "explicit:[g^1,g^2]", (4, 6, 12)),
    ("cyclic:24", "explicit:[g^1,g^12]", (4, 5, 11)),
    ("product:cyclic:21,cyclic:2", "standard", (4, 10, 20)),
    ("dihedral:12", "standard", (4, 5, 11)),
    ("cyclic:25", "standard", (4, 10, 20)),
    ("product:cyclic:5,cyclic:5", "standard", (4, 4, 8)),
]


def _instance_graph(inst: LemmaInstance) -> CayleyGraph:
    if inst.genset == "presentation":
        group = parse_group_spec(inst.spec)
        a, b = a5_presentation(group)
        return build(group, inverse_closure(group, [a, b]))
    return inst.build()


def _separator_element(G: CayleyGraph, inst: LemmaInstance) -> Optional[int]:
    if inst.h is not None:
        return G.group.names.index(inst.h)
    reps = separator_representatives(G, inst.r)
    return reps[0] if reps else None


def instance_checks(inst: LemmaInstance, seed: int = 0, samples: int = 500) -> Check:
    G = _instance_graph(inst)
    r = inst.r
    e = G.identity
    checks = []
    seps = find_local_2separators(G, r, include_cutvertices=False)
    census = {"cutvertices": len(local_cutvertices(G, r)), "2-separators": len(seps)}
    checks.append(Check("separator-census", PASS, census))
    checks.append(downward_locality_check(G, r))
    checks.append(orbit_closure_check(G, r))
    h = _separator_element(G, inst)
    if h is None or not is_local_2separator(G, e, h, r):
        checks.append(skipped("separator-lemmas", "no r-local 2-separator {I, h}"))
        return combine(f"{inst.spec} {inst.genset} r={r}", checks, note=inst.note)
    X = (e, h)
    separations = local_2separations(G, X, r)
    for k, sep in enumerate(separations[:4]):
        pc = parity_lemma_check(G, sep, e, samples=samples, seed=seed + k)
        pc.name = f"parity-lemma[{k}]"
        checks.append(pc)
        cw = cycle_weak_traversal_check(G, sep, seed=seed)
        cw.name = f"cycle-weak-traversal[{k}]"
        checks.append(cw)
    checks.append(strong_traversal_check(G, X, r, seed=seed))
    checks.append(crossing_symmetry_check(G, r, seps))
    checks.append(section_lemma_suite(G, X, r))
    if G.group.is_involution(h):
        checks.append(involution_suite(G, h, r))
        checks.append(loc2sep_to_cutvertex_check(G, h, r - 2))
    else:
        checks.append(non_involution_suite(G, h, r))
    return combine(f"{inst.spec} {inst.genset} r={r}", checks, note=inst.note)


def insertion_check(spec: str, genset: str, radii: tuple[int, int, int]) -> Check:
    name = f"edge-insertion {spec} {genset} r={list(radii)}"
    group = parse_group_spec(spec)
    G = build(group, parse_genset(group, genset).gensets[0])
    err = insertion_preconditions(G, *radii)
    if err is not None:
        return skipped(name, err.name)
    try:
        res = edge_insertion(G, *radii)
    except InconsistencyError as exc:
        return Check(name, FAIL, note=str(exc))
    return Check(name, PASS if res.verified else FAIL, {**res.witness, "postconditions": res.postconditions},
                 checked=len(res.postconditions))


def word_checks(n_max: int = 6) -> Check:
    results = [
        words.check_commutator_lengths(n_max),
        words.check_no_squares(n_max),
        words.check_magic_lemma(n_max),
        words.check_no_rectangles(n_max),
        words.check_ramsey(n_max),
        words.zigzag3_table_check(),
    ]
    checks = [Check(w.name, PASS if w.passed else FAIL, w.counterexample, checked=w.checked) for w in results]
    rec = [n for n in range(2, n_max + 2) if not words.recursive_form_check(n)]
    checks.append(Check("recursive-form", FAIL if rec else PASS, {"n": rec[0]} if rec else None,
                        checked=n_max))
    return combine("word-lemmas", checks)


def run_lemma_suite(scope: str = "all", n_max: int = 6, seed: int = 0, samples: int = 500,
                    corpus: Optional[list[LemmaInstance]] = None) -> dict:
    if scope not in ("all", "words", "instances"):
        raise ValueError(f"unknown scope {scope!r}")
    timings = {}
    sections = []
    if scope in ("all", "words"):
        t = time.perf_counter()
        sections.append(word_checks(n_max))
        timings["words"] = round(time.perf_counter() - t, 3)
    if scope in ("all", "instances"):
        for inst in corpus or lemma_corpus():
            t = time.perf_counter()
            sections.append(instance_checks(inst, seed, samples))
            timings[f"{inst.spec} {inst.genset}"] = round(time.perf_counter() - t, 3)
        t = time.perf_counter()
        sections.append(combine("edge-insertion", [insertion_check(*c) for c in INSERTION_CASES]))
        timings["edge-insertion"] = round(time.perf_counter() - t, 3)
    top = combine("lemma-suite", sections)
    return {"kind": "lemmas", "result": top.as_dict(), "passed": top.passed, "meta": _meta(timings)}


# ---------------------------------------------------------------- girth search


def a5_presentation(group: Group) -> tuple[int, int]:
    """First pair (a, b) in index order with a^3 = b^2 = (ab)^5 = I generating the group."""
    orders = [group.element_order(x) for x in group.elements()]
    for a in group.elements():
        if orders[a] != 3:
            continue
        for b in group.elements():
            if orders[b] == 2 and orders[group.mul[a][b]] == 5 and len(group.closure([a, b])) == group.order:
                return a, b
    raise ValueError("no presentation pair found")


def a5_cutvertex_check(r: int = 9) -> Check:
    group = make_alternating(5)
    a, b = a5_presentation(group)
    G = build(group, inverse_closure(group, [a, b]))
    bad = [v for v in G.vertices() if not is_local_cutvertex(G, v, r)]
    return Check("a5-every-vertex-local-cutvertex", FAIL if bad else PASS,
                 {"a": group.names[a], "b": group.names[b], "r": r, "non_cutvertices": bad[:5]},
                 checked=G.n)


def _perm_girth(gens: list[tuple[int, ...]], limit: int) -> Optional[int]:
    """Girth (<= limit) of the Cayley graph of <gens> through the identity, or None if larger."""
    ident = tuple(range(len(gens[0])))
    dist = {ident: 0}
    parent = {ident: None}
    queue = deque([ident])
    best = None
    while queue:
        x = queue.popleft()
        if 2 * dist[x] + 1 > limit:
            break
        for s in gens:
            y = perm_compose(x, s)
            if y == parent[x]:
                continue
            if y in dist:
                length = dist[x] + dist[y] + 1
                if best is None or length < best:
                    best = length
            else:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return best if best is not None and best <= limit else None


def _perm_span(gens: list[tuple[int, ...]], cap: int) -> int:
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier and len(seen) <= cap:
        nxt = []
        for x in frontier:
            for s in gens:
                y = perm_compose(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def _perm_graph(gens: list[tuple[int, ...]]) -> Graph:
    ident = tuple(range(len(gens[0])))
    index = {ident: 0}
    order = [ident]
    edges = []
    i = 0
    while i < len(order):
        x = order[i]
        for s in gens:
            y = perm_compose(x, s)
            if y not in index:
                index[y] = len(order)
                order.append(y)
            edges.append((i, index[y]))
        i += 1
    return Graph.from_edges(len(order), edges, [cycle_notation(p) for p in order], "perm-cayley")


def _random_even(n: int, rng: random.Random) -> tuple[int, ...]:
    while True:
        p = list(range(n))
        rng.shuffle(p)
        if perm_parity(p) == 0 and p != list(range(n)):
            return tuple(p)


def girth_search(r: int, n_max: int, trials: int = 200, seed: int = 0, verify_all_up_to: int = 2600) -> dict:
    """Random pairs x, y in A_n with girth > r and <x, y> = A_n; never claims nonexistence."""
    if r < 3 or n_max < 5:
        raise ValueError("need r >= 3 and n_max >= 5")
    rng = random.Random(seed)
    for n in range(5, n_max + 1):
        full = 1
        for k in range(3, n + 1):
            full *= k
        for _ in range(trials):
            x, y = _random_even(n, rng), _random_even(n, rng)
            gens = [x, perm_inverse(x), y, perm_inverse(y)]
            if _perm_girth(gens, r) is not None:
                continue
            if _perm_span(gens, full) != full:
                continue
            G = _perm_graph(gens)
            verts = list(G.vertices()) if G.n <= verify_all_up_to else [0]
            ok = all(is_local_cutvertex(G, v, r) for v in verts)
            return {"found": True, "n": n, "x": cycle_notation(x), "y": cycle_notation(y),
                    "order": G.n, "girth_exceeds": r, "verified_vertices": len(verts),
                    "every_vertex_local_cutvertex": ok,
                    "note": "" if len(verts) == G.n else "verified at the identity; the graph is vertex-transitive"}
    return {"found": False, "note": "not found at this scale", "r": r, "n_max": n_max, "trials": trials}


# --------------------------------------------------------------------- analyze


def analyze(group_spec: str, genset_spec: str, r: int, crossing: bool = True) -> dict:
    group = parse_group_spec(group_spec)
    if genset_spec == "presentation":
        a, b = a5_presentation(group)
        gs = validate_genset(group, inverse_closure(group, [a, b]))
    else:
        gs = parse_genset(group, genset_spec).gensets[0]
    G = build(group, gs)
    nil = nilpotency_class(group)
    cut = local_cutvertices(G, r)
    seps = find_local_2separators(G, r, include_cutvertices=False)
    reps = []
    for s in separator_representatives(G, r):
        X = (G.identity, s)
        entry = {"h": group.names[s], "distance": G.bfs(G.identity)[s],
                 "involution": group.is_involution(s),
                 "component_sizes": sorted(len(c) for c in connectivity_graph(G, *X, r).components)}
        if crossing:
            crossed = crossing_separators(G, X, r, seps)
            entry["totally_nested"] = not crossed
            entry["crossed_by"] = len(crossed)
        reps.append(entry)
    g = girth(G)
    return {
        "kind": "analyze",
        "group": {"spec": group_spec, "label": group.label, "order": group.order, "abelian": group.is_abelian(),
                  "nilpotency_class": nil.klass, "cyclic_product": cyclic_product_decomposition(group)},
        "genset": genset_names(gs, group),
        "r": r,
        "graph": {"vertices": G.n, "edges": G.num_edges, "girth": g if g != float("inf") else None},
        "local_cutvertices": {"count": len(cut), "vertices": [group.names[v] for v in cut[:12]]},
        "local_2separators": {"count": len(seps), "representatives": reps,
                              "pairs": [[group.names[v] for v in s.vertices] for s in seps[:24]]},
    }


__all__ = [
    "CorpusEntry", "LemmaInstance", "default_corpus", "lemma_corpus", "load_corpus", "parse_genset",
    "all_pair_gensets", "evaluate_entry", "run_theorem_corpus", "verify_report", "canonical_json",
    "run_lemma_suite", "instance_checks", "insertion_check", "word_checks", "girth_search", "a5_presentation",
    "a5_cutvertex_check", "analyze", "GensetError",
]
