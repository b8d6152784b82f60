"""Simplicial complexes given by their facets: order complexes of cover
posets and independence complexes of graphs, with the two combinatorial
certificates used throughout the package, strong connectivity and
shellability.

Shellability is decided exactly by a subset dynamic program over facet
sets (a prefix's usability does not depend on its internal order), and any
order found is re-verified against the shelling definition before the
answer is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import SearchBudget, default_budget
from .errors import MalformedInput, NotPure
from .graph import Graph


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex described by its facets over hashable vertex labels."""

    facets: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        if not self.facets:
            raise MalformedInput("a complex needs at least one facet")
        for i, f in enumerate(self.facets):
            for j, h in enumerate(self.facets):
                if i != j and f <= h:
                    raise MalformedInput("no facet may contain another")

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        # Drop faces contained in others, deduplicate, sort deterministically.
        sets = {frozenset(f) for f in facets}
        maximal = [f for f in sets if not any(f < h for h in sets)]
        return cls(tuple(sorted(maximal, key=lambda f: (len(f), sorted(map(str, f))))))

    @property
    def ground_set(self) -> frozenset:
        out: set = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    @property
    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def facet_lines(self) -> list[str]:
        return [
            "{" + " ".join(sorted(map(str, f))) + "}" for f in self.facets
        ]


def independence_complex(g: Graph, budget: SearchBudget | None = None) -> SimplicialComplex:
    """The complex whose faces are the independent sets of g (facets are the
    maximal independent sets)."""
    budget = budget or default_budget()
    budget.check_graph(g.vertex_count, g.edge_count, "independence_complex")
    facets: list[frozenset[int]] = []

    def extend(candidates: list[int], chosen: frozenset[int], excluded: set[int]) -> None:
        if not candidates:
            # Maximal iff no excluded vertex could still be added.
            if all(g.neighbors(v) & chosen for v in excluded):
                facets.append(chosen)
            return
        v = candidates[0]
        rest = candidates[1:]
        extend([w for w in rest if w not in g.neighbors(v)], chosen | {v}, excluded)
        extend(rest, chosen, excluded | {v})

    extend(list(g.vertices), frozenset(), set())
    return SimplicialComplex.from_facets(facets)


def _facet_adjacent(f: frozenset, h: frozenset) -> bool:
    return len(f & h) == len(f) - 1


def is_strongly_connected(c: SimplicialComplex) -> bool:
    """Can one walk between any two facets through codimension-one overlaps?"""
    if not c.is_pure:
        raise NotPure("strong connectivity is defined for pure complexes")
    facets = c.facets
    if len(facets) == 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(len(facets)):
            if j not in seen and _facet_adjacent(facets[i], facets[j]):
                seen.add(j)
                stack.append(j)
    return len(seen) == len(facets)


def _can_append(facets: tuple[frozenset, ...], used: tuple[int, ...], j: int) -> bool:
    """Shelling step: every old intersection with facet j must sit inside a
    codimension-one old intersection."""
    fj = facets[j]
    big = [facets[i] & fj for i in used if len(facets[i] & fj) == len(fj) - 1]
    for i in used:
        inter = facets[i] & fj
        if not any(inter <= b for b in big):
            return False
    return True


def _is_shelling_order(facets: tuple[frozenset, ...], order: list[int]) -> bool:
    return all(
        _can_append(facets, tuple(order[:pos]), j)
        for pos, j in enumerate(order)
        if pos > 0
    )


def is_shellable(c: SimplicialComplex, budget: SearchBudget | None = None) -> bool:
    """Exhaustive shellability decision for pure complexes.

    A set of already-shelled facets determines which facets may come next,
    so the search memoises dead facet sets; a successful order is verified
    facet by facet before True is returned.
    """
    if not c.is_pure:
        raise NotPure("shellability is decided for pure complexes only")
    budget = budget or default_budget()
    budget.check_facets(len(c.facets), "is_shellable")
    facets = c.facets
    count = len(facets)
    if count == 1:
        return True
    dead: set[frozenset[int]] = set()

    def search(used: tuple[int, ...]) -> list[int] | None:
        if len(used) == count:
            return list(used)
        key = frozenset(used)
        if key in dead:
            return None
        for j in range(count):
            if j in used:
                continue
            if _can_append(facets, used, j):
                result = search(used + (j,))
                if result is not None:
                    return result
        dead.add(key)
        return None

    for first in range(count):
        order = search((first,))
        if order is not None:
            if not _is_shelling_order(facets, order):  # pragma: no cover
                raise AssertionError("search produced an invalid shelling order")
            return True
    return False
