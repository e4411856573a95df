"""Finite groups as dense multiplication tables on indices 0..order-1."""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 512


class GroupError(ValueError):
    """A malformed group table or an invalid constructor parameter."""

    def __init__(self, message: str, triple: Optional[tuple] = None):
        super().__init__(message)
        self.triple = triple


class SpecError(ValueError):
    """A group or generating-set spec string that does not parse."""

    def __init__(self, message: str, spec: str, pos: int):
        super().__init__(f"{message} at position {pos} in {spec!r}")
        self.spec = spec
        self.pos = pos


class GensetError(ValueError):
    kind = "invalid-genset"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ContainsIdentity(GensetError):
    kind = "contains-identity"


class NotInverseClosed(GensetError):
    kind = "not-inverse-closed"


class DoesNotGenerate(GensetError):
    kind = "does-not-generate"


@dataclass(frozen=True, eq=False)
class Group:
    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    names: tuple[str, ...]
    label: str = "group"
    standard_gens: tuple[int, ...] = ()

    def __repr__(self) -> str:
        return f"Group({self.label}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def elements(self) -> range:
        return range(self.order)

    def m(self, *xs: int) -> int:
        """Product of the given elements, left to right."""
        out = self.identity
        for x in xs:
            out = self.mul[out][x]
        return out

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        out = self.identity
        for _ in range(k):
            out = self.mul[out][x]
        return out

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y][x]
            k += 1
        return k

    def commutes(self, x: int, y: int) -> bool:
        return self.mul[x][y] == self.mul[y][x]

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in range(self.order) for b in range(a))

    def is_involution(self, x: int) -> bool:
        return x != self.identity and self.mul[x][x] == self.identity

    def equivalent(self, g: int, h: int) -> bool:
        return equivalent(self, g, h)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r} in {self.label}") from None

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``gens`` (breadth-first under right multiplication)."""
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul[x][s]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def table_array(self) -> np.ndarray:
        return np.asarray(self.mul, dtype=np.int32)


@dataclass(frozen=True)
class GenSet:
    group: Group = field(repr=False)
    elements: frozenset[int]

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def inverse_classes(self) -> list[tuple[int, ...]]:
        """The classes {s, s^-1} of the set, each sorted."""
        out = []
        for s in sorted(self.elements):
            t = self.group.inv[s]
            if s <= t:
                out.append((s,) if s == t else (s, t))
        return out


@dataclass(frozen=True)
class NilpotencyResult:
    klass: Optional[int]
    witness: Optional[tuple[int, int]] = None

    @property
    def nilpotent(self) -> bool:
        return self.klass is not None

    def __str__(self) -> str:
        return f"class {self.klass}" if self.nilpotent else "not nilpotent"


# ---------------------------------------------------------------- validation


def check_table(mul: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Validate a raw table; returns (identity, inverse table).

    Raises GroupError naming the first violating triple for non-associative
    input.
    """
    n = len(mul)
    if n == 0:
        raise GroupError("empty table")
    arr = np.asarray(mul)
    if arr.shape != (n, n):
        raise GroupError(f"table is not square: shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise GroupError("table entries must be integers")
    if arr.min() < 0 or arr.max() >= n:
        raise GroupError("table entry out of range")
    idx = np.arange(n)
    ids = [e for e in range(n) if (arr[e] == idx).all() and (arr[:, e] == idx).all()]
    if not ids:
        raise GroupError("no two-sided identity")
    e = ids[0]
    inv = []
    for x in range(n):
        ys = np.nonzero(arr[x] == e)[0]
        y = next((int(y) for y in ys if arr[y, x] == e), None)
        if y is None:
            raise GroupError(f"element {x} has no two-sided inverse")
        inv.append(y)
    bad = first_nonassociative(arr)
    if bad is not None:
        raise GroupError(f"not associative: ({bad[0]}*{bad[1]})*{bad[2]} != {bad[0]}*({bad[1]}*{bad[2]})", bad)
    return e, tuple(inv)


def first_nonassociative(arr: np.ndarray, sample: Optional[int] = None, seed: int = 0):
    """First triple (a, b, c) with (ab)c != a(bc), or None.

    Exhaustive (chunked over a) unless ``sample`` is given.
    """
    n = arr.shape[0]
    if sample is not None:
        rng = np.random.default_rng(seed)
        trip = rng.integers(0, n, size=(sample, 3))
        a, b, c = trip.T
        bad = np.nonzero(arr[arr[a, b], c] != arr[a, arr[b, c]])[0]
        return tuple(int(v) for v in trip[bad[0]]) if len(bad) else None
    bc = arr  # bc[b, c] = b*c
    for a in range(n):
        lhs = arr[arr[a]][:, :]  # lhs[b, c] = (a*b)*c
        rhs = arr[a][bc]  # rhs[b, c] = a*(b*c)
        diff = np.argwhere(lhs != rhs)
        if len(diff):
            b, c = diff[0]
            return (a, int(b), int(c))
    return None


def _finish(mul, names, label, standard_gens=(), cap=DEFAULT_ORDER_CAP, identity=None, inv=None) -> Group:
    n = len(mul)
    if n > cap:
        raise GroupError(f"order {n} exceeds the configured cap {cap}")
    mul = tuple(tuple(int(v) for v in row) for row in mul)
    if identity is None or inv is None:
        identity, inv = check_table(mul)
    return Group(n, mul, identity, tuple(inv), tuple(names), label, tuple(sorted(set(standard_gens))))


# -------------------------------------------------------------- constructors


def make_cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    gens = {1 % n, (n - 1) % n} - {0}
    return _finish(mul, [f"g^{k}" for k in range(n)], f"C{n}", gens,
                   cap=max(n, DEFAULT_ORDER_CAP), identity=0, inv=[(-a) % n for a in range(n)])


def direct_product(a: Group, b: Group, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Componentwise product; element (x, y) has index x*|b| + y."""
    nb = b.order
    n = a.order * nb
    if n > cap:
        raise GroupError(f"order {n} exceeds the configured cap {cap}")
    mul = [
        [a.mul[x1][x2] * nb + b.mul[y1][y2] for x2 in range(a.order) for y2 in range(nb)]
        for x1 in range(a.order)
        for y1 in range(nb)
    ]
    names = [f"({p},{q})" for p in a.names for q in b.names]
    gens = {s * nb + b.identity for s in a.standard_gens} | {a.identity * nb + s for s in b.standard_gens}
    inv = [a.inv[x] * nb + b.inv[y] for x in range(a.order) for y in range(nb)]
    return _finish(mul, names, f"{a.label}x{b.label}", gens, cap, a.identity * nb + b.identity, inv)


def make_dihedral(n: int) -> Group:
    """Symmetries of the n-gon, order 2n; index k + n*e stands for r^k s^e."""
    if n < 3:
        raise GroupError("dihedral group needs n >= 3")

    def mul(x, y):
        a, e = x % n, x // n
        b, f = y % n, y // n
        return (a + (b if e == 0 else -b)) % n + n * ((e + f) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    names = [f"r^{k}" for k in range(n)] + [f"r^{k}s" for k in range(n)]
    return _finish(table, names, f"D{n}", {1, n - 1, n})


def make_quaternion(order: int = 8) -> Group:
    if order != 8:
        raise GroupError("only the quaternion group of order 8 is supported")
    basis = ["1", "i", "j", "k"]
    # unit quaternions as (sign, basis index)
    prod = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elems = [(s, b) for b in range(4) for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        (s1, b1), (s2, b2) = elems[x], elems[y]
        s, b = prod[(b1, b2)]
        return index[(s1 * s2 * s, b)]

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    names = [("" if s == 1 else "-") + basis[b] for s, b in elems]
    return _finish(table, names, "Q8", {index[(1, 1)], index[(-1, 1)], index[(1, 2)], index[(-1, 2)]})


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def make_heisenberg(p: int) -> Group:
    """Unitriangular 3x3 matrices over Z/p; (a, b, c)(a', b', c') = (a+a', b+b', c+c'+ab')."""
    if not _is_prime(p):
        raise GroupError(f"heisenberg group needs a prime, got {p}")
    elems = list(itertools.product(range(p), repeat=3))
    index = {e: i for i, e in enumerate(elems)}
    table = [
        [index[((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)] for (a2, b2, c2) in elems]
        for (a, b, c) in elems
    ]
    names = [f"[{a},{b},{c}]" for a, b, c in elems]
    gens = {index[(1, 0, 0)], index[(p - 1, 0, 0)], index[(0, 1, 0)], index[(0, p - 1, 0)]}
    return _finish(table, names, f"Heis{p}", gens)


def perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p*q)(x) = p(q(x)): apply q first."""
    return tuple(p[i] for i in q)


def perm_inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def cycle_notation(p: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)" into a permutation tuple."""
    perm = list(range(degree))
    for cyc in re.findall(r"\(([^)]*)\)", text):
        pts = [int(t) - 1 for t in cyc.replace(",", " ").split()]
        for i, x in enumerate(pts):
            perm[x] = pts[(i + 1) % len(pts)]
    return tuple(perm)


def perm_parity(p: Sequence[int]) -> int:
    seen, parity = set(), 0
    for start in range(len(p)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def from_permutations(gens: Sequence[tuple[int, ...]], label: str = "perm", cap: int = DEFAULT_ORDER_CAP,
                      elements: Optional[Sequence[tuple[int, ...]]] = None) -> Group:
    """Group generated by permutations, converted to a multiplication table."""
    if elements is None:
        degree = len(gens[0]) if gens else 1
        ident = tuple(range(degree))
        seen = {ident: 0}
        order = [ident]
        i = 0
        while i < len(order):
            x = order[i]
            for s in gens:
                y = perm_compose(x, s)
                if y not in seen:
                    if len(order) >= cap:
                        raise GroupError(f"permutation group exceeds the configured cap {cap}")
                    seen[y] = len(order)
                    order.append(y)
            i += 1
        elements = sorted(order)
    if len(elements) > cap:
        raise GroupError(f"order {len(elements)} exceeds the configured cap {cap}")
    index = {p: i for i, p in enumerate(elements)}
    table = [[index[perm_compose(p, q)] for q in elements] for p in elements]
    std = set()
    for s in gens:
        std |= {index[s], index[perm_inverse(s)]}
    std.discard(index[tuple(range(len(elements[0])))])
    return _finish(table, [cycle_notation(p) for p in elements], label, std, cap)


def alternating_generators(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(1 2 3) together with an n-cycle (n odd) or (2 3 ... n) (n even)."""
    three = parse_cycles("(1 2 3)", n)
    if n % 2:
        long = parse_cycles("(" + " ".join(str(i) for i in range(1, n + 1)) + ")", n)
    else:
        long = parse_cycles("(" + " ".join(str(i) for i in range(2, n + 1)) + ")", n)
    return three, long


def make_alternating(n: int, cap: int = DEFAULT_ORDER_CAP) -> Group:
    if n < 3:
        raise GroupError("alternating group needs n >= 3")
    elems = [p for p in itertools.permutations(range(n)) if perm_parity(p) == 0]
    if len(elems) > cap:
        raise GroupError(f"order {len(elems)} exceeds the configured cap {cap}")
    return from_permutations(alternating_generators(n), f"A{n}", cap, elements=elems)


def from_table(source, label: Optional[str] = None, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Load {order, mul: row-major array, names?} from a JSON path or a dict."""
    if isinstance(source, (str, Path)):
        path = Path(source)
        data = json.loads(path.read_text())
        label = label or path.stem
    else:
        data = source
    order = int(data["order"])
    flat = data["mul"]
    if flat and isinstance(flat[0], list):
        rows = flat
    else:
        if len(flat) != order * order:
            raise GroupError(f"mul has {len(flat)} entries, expected {order * order}")
        rows = [flat[i * order:(i + 1) * order] for i in range(order)]
    if len(rows) != order:
        raise GroupError(f"mul has {len(rows)} rows, expected {order}")
    names = data.get("names") or [f"x{i}" for i in range(order)]
    identity, inv = check_table(rows)
    g = _finish(rows, names, label or "table", (), cap, identity, inv)
    return _with_gens(g, greedy_generators(g))


def to_table_json(g: Group) -> dict:
    return {"order": g.order, "mul": [v for row in g.mul for v in row], "names": list(g.names)}


def _with_gens(g: Group, gens: Iterable[int]) -> Group:
    std = set()
    for s in gens:
        std |= {s, g.inv[s]}
    std.discard(g.identity)
    return Group(g.order, g.mul, g.identity, g.inv, g.names, g.label, tuple(sorted(std)))


def greedy_generators(g: Group) -> list[int]:
    """A small generating list: repeatedly add an element of maximal order outside the span."""
    gens: list[int] = []
    span = g.closure(gens)
    by_order = sorted(g.elements(), key=lambda x: (-g.element_order(x), x))
    while len(span) < g.order:
        x = next(x for x in by_order if x not in span)
        gens.append(x)
        span = g.closure(gens)
    return gens


# ----------------------------------------------------------------- analysis


def equivalent(g: Group, a: int, b: int) -> bool:
    return a == b or a == g.inv[b]


def commutator1(g: Group, a: int, b: int) -> int:
    """a b^-1 a^-1 b."""
    return g.m(a, g.inv[b], g.inv[a], b)


def iterate_commutator_value(g: Group, a: int, b: int, n: int) -> int:
    """Value of the n-th iterated commutator: c_1 = a b^-1 a^-1 b, c_k = a c_{k-1}^-1 a^-1 c_{k-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = commutator1(g, a, b)
    for _ in range(n - 1):
        c = commutator1(g, a, c)
    return c


def nilpotency_class(g: Group) -> NilpotencyResult:
    """Least n with c_n(a, b) trivial for all inequivalent a, b.

    A pair whose commutator sequence enters a cycle avoiding the identity makes
    the group non-nilpotent under this convention.
    """
    worst = 1
    witness = None
    e = g.identity
    for a in g.elements():
        for b in g.elements():
            if equivalent(g, a, b):
                continue
            c = commutator1(g, a, b)
            k = 1
            seen = {c}
            while c != e:
                c = commutator1(g, a, c)
                k += 1
                if c in seen:
                    return NilpotencyResult(None, (a, b))
                seen.add(c)
            if k > worst:
                worst, witness = k, (a, b)
    return NilpotencyResult(worst, witness)


def validate_genset(g: Group, elements: Iterable[int]) -> GenSet:
    s = frozenset(elements)
    if g.identity in s:
        raise ContainsIdentity("generating set contains the neutral element", g.identity)
    missing = sorted(x for x in s if g.inv[x] not in s)
    if missing:
        raise NotInverseClosed(f"inverse of {g.names[missing[0]]} missing", missing[0])
    span = g.closure(s)
    if len(span) != g.order:
        raise DoesNotGenerate(f"generates a subgroup of order {len(span)} < {g.order}", len(span))
    return GenSet(g, s)


def inverse_closure(g: Group, elements: Iterable[int]) -> frozenset[int]:
    out = set()
    for x in elements:
        out |= {x, g.inv[x]}
    return frozenset(out)


def is_normal_closure(g: Group, h: int) -> bool:
    """True iff the cyclic subgroup generated by h is normal."""
    sub = g.closure([h])
    for gamma in g.elements():
        gi = g.inv[gamma]
        for x in sub:
            if g.m(gamma, x, gi) not in sub:
                return False
    return True


def cyclic_product_decomposition(g: Group) -> Optional[tuple[int, int]]:
    """(i, j) with g isomorphic to C_i x C_j and j in {1, 2}, or None.

    Decided structurally from an element of maximal order m: cyclic when
    |g| = m, and C_m x C_2 when |g| = 2m, g is abelian and some involution
    lies outside <m>.
    """
    orders = [g.element_order(x) for x in g.elements()]
    m = max(orders)
    if g.order == m:
        return (m, 1)
    if g.order != 2 * m or not g.is_abelian():
        return None
    x = orders.index(m)
    span = g.closure([x])
    if any(g.is_involution(y) and y not in span for y in g.elements()):
        return (m, 2)
    return None


def quotient_group(g: Group, normal: Iterable[int]) -> tuple[Group, list[int]]:
    """Quotient by a normal subgroup; returns the group and the coset index of each element."""
    sub = sorted(set(normal))
    coset_of = [-1] * g.order
    reps = []
    for x in g.elements():
        if coset_of[x] >= 0:
            continue
        for y in sub:
            coset_of[g.mul[x][y]] = len(reps)
        reps.append(x)
    table = [[coset_of[g.mul[a][b]] for b in reps] for a in reps]
    names = ["{" + ",".join(g.names[g.mul[x][y]] for y in sub) + "}" for x in reps]
    std = {coset_of[s] for s in g.standard_gens} - {coset_of[g.identity]}
    q = _finish(table, names, f"{g.label}/{len(sub)}", std,
                identity=coset_of[g.identity], inv=[coset_of[g.inv[x]] for x in reps])
    return q, coset_of


# ------------------------------------------------------------------- specs


def _split_top(body: str, spec: str, offset: int) -> list[tuple[str, int]]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError("unbalanced ')'", spec, offset + i)
        elif ch == "," and depth == 0:
            parts.append((body[start:i], offset + start))
            start = i + 1
    if depth:
        raise SpecError("unbalanced '('", spec, offset + len(body))
    parts.append((body[start:], offset + start))
    return parts


def parse_group_spec(spec: str, cap: int = DEFAULT_ORDER_CAP) -> Group:
    """Build a group from strings like "cyclic:12" or "product:cyclic:12,cyclic:2"."""
    return _parse(spec.strip(), spec, 0, cap)


def _parse(text: str, spec: str, offset: int, cap: int) -> Group:
    if text.startswith("(") and text.endswith(")"):
        return _parse(text[1:-1], spec, offset + 1, cap)
    kind, sep, arg = text.partition(":")
    if not sep:
        raise SpecError("expected '<kind>:<argument>'", spec, offset)
    argpos = offset + len(kind) + 1

    def number() -> int:
        if not arg.isdigit():
            raise SpecError(f"expected an integer for {kind}", spec, argpos)
        return int(arg)

    try:
        if kind == "cyclic":
            return make_cyclic(number())
        if kind == "dihedral":
            return make_dihedral(number())
        if kind == "quaternion":
            return make_quaternion(number())
        if kind == "heisenberg":
            return make_heisenberg(number())
        if kind == "alternating":
            return make_alternating(number(), cap)
        if kind == "table":
            return from_table(arg, cap=cap)
    except GroupError as exc:
        raise SpecError(str(exc), spec, argpos) from exc
    if kind == "product":
        parts = _split_top(arg, spec, argpos)
        if len(parts) < 2:
            raise SpecError("product needs at least two factors", spec, argpos)
        groups = [_parse(p.strip(), spec, pos, cap) for p, pos in parts]
        out = groups[0]
        for other in groups[1:]:
            try:
                out = direct_product(out, other, cap)
            except GroupError as exc:
                raise SpecError(str(exc), spec, argpos) from exc
        return out
    raise SpecError(f"unknown group kind {kind!r}", spec, offset)
