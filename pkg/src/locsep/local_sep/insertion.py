"""Adding the long edge of a totally nested local 2-separator as a new generator."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..cayley import CayleyGraph, build, girth, is_cycle_graph
from .crossing import is_totally_nested
from .separators import (find_local_2separators, is_local_2separator, is_local_cutvertex,
                         separator_representatives)


class PreconditionError(ValueError):
    def __init__(self, name: str, detail: str = ""):
        super().__init__(f"precondition failed: {name}" + (f" ({detail})" if detail else ""))
        self.name = name


class InconsistencyError(RuntimeError):
    """No totally nested separator exists although every precondition holds."""


@dataclass
class InsertionResult:
    h: int
    graph: CayleyGraph
    postconditions: dict[str, bool]
    witness: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(self.postconditions.values())


def insertion_preconditions(G: CayleyGraph, r_minus: int, r_0: int, r_plus: int) -> Optional[PreconditionError]:
    """The first violated precondition, or None."""
    if not 4 <= r_minus <= r_0 <= r_plus:
        return PreconditionError("4 <= r_minus <= r_0 <= r_plus", f"{r_minus}, {r_0}, {r_plus}")
    if r_0 * r_minus > 2 * r_plus:
        return PreconditionError("r_0 * r_minus <= 2 * r_plus", f"{r_0 * r_minus} > {2 * r_plus}")
    if is_local_cutvertex(G, G.identity, r_minus):
        return PreconditionError("no r_minus-local cutvertex")
    if is_cycle_graph(G) and G.n <= r_plus:
        return PreconditionError("not a cycle of length <= r_plus", f"cycle of length {G.n}")
    if girth(G) > r_plus:
        return PreconditionError("contains a cycle of length <= r_plus", f"girth {girth(G)}")
    if not separator_representatives(G, r_plus):
        return PreconditionError("has an r_plus-local 2-separator")
    return None


def edge_insertion(G: CayleyGraph, r_minus: int, r_0: int, r_plus: int) -> InsertionResult:
    """Find h with {identity, h} a totally nested r_plus-local separator and add h^{+-1} to S.

    Postconditions are recomputed on the new Cayley graph, never assumed.
    """
    err = insertion_preconditions(G, r_minus, r_0, r_plus)
    if err is not None:
        raise err
    group = G.group
    seps = find_local_2separators(G, r_plus, include_cutvertices=False)
    h = None
    for s in separator_representatives(G, r_plus):
        if is_totally_nested(G, (group.identity, s), r_plus, seps):
            h = s
            break
    if h is None:
        raise InconsistencyError("every r_plus-local 2-separator is crossed")
    new_gens = set(G.gens) | {h, group.inv[h]}
    G2 = build(group, new_gens)
    e = group.identity
    post = {
        "{I,h} is an r_0-local 2-separator of G'": is_local_2separator(G2, e, h, r_0),
        "G' has no r_0-local cutvertex": not is_local_cutvertex(G2, e, r_0),
    }
    witness = {
        "h": group.names[h],
        "distance": G.bfs(e)[h],
        "already_generator": h in set(G.gens),
        "r": [r_minus, r_0, r_plus],
    }
    return InsertionResult(h, G2, post, witness)
