"""Finite simple graphs and the classical invariants the rest of the package
builds on: matchings, perfect matchings, paired domination, induced
matchings, bipartitions and connectivity.

Vertices are the integers 1..n.  Loops, multiple edges and isolated
vertices are rejected at construction time; every operation here is a pure
function of an immutable :class:`Graph`.  The matching and domination
searches are exact: branch-and-bound or subset search guarded by a
:class:`~basiccovers.budget.SearchBudget`, never a heuristic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .budget import SearchBudget, default_budget
from .errors import (
    DimensionMismatch,
    IsolatedVertex,
    LoopEdge,
    MalformedInput,
    NotBipartite,
)

Edge = tuple[int, int]


def _canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertex set {1, ..., vertex_count}.

    Edges are stored canonically (smaller label first, sorted tuple).
    ``names`` optionally maps labels to display strings, e.g. after a
    projection collapsed several original vertices into one.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 1:
            raise MalformedInput(f"vertex count must be positive, got {n}")
        seen: set[Edge] = set()
        covered = [False] * (n + 1)
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop edge {{{u},{v}}} is not allowed")
            if not (1 <= u < v <= n):
                raise MalformedInput(
                    f"edge {{{u},{v}}} is not canonical for vertex count {n}"
                )
            if (u, v) in seen:
                raise MalformedInput(f"duplicate edge {{{u},{v}}}")
            seen.add((u, v))
            covered[u] = covered[v] = True
        for v in range(1, n + 1):
            if not covered[v]:
                raise IsolatedVertex(
                    f"vertex {v} lies on no edge; isolated vertices are rejected"
                )
        if self.names is not None and len(self.names) != n:
            raise MalformedInput("names table must have one entry per vertex")

    @classmethod
    def from_edges(
        cls,
        edges,
        vertex_count: int | None = None,
        names: tuple[str, ...] | None = None,
    ) -> "Graph":
        """Build a graph from an iterable of 2-element edge pairs.

        The vertex count defaults to the largest label that occurs.
        """
        canon = sorted({_canonical_edge(int(u), int(v)) for u, v in edges})
        for u, v in canon:
            if u == v:
                raise LoopEdge(f"loop edge {{{u},{v}}} is not allowed")
            if u < 1:
                raise MalformedInput(f"vertex labels must be >= 1, got {u}")
        if not canon:
            raise MalformedInput("a graph needs at least one edge")
        n = vertex_count if vertex_count is not None else max(v for _, v in canon)
        return cls(n, tuple(canon), names)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, indexed so that ``adjacency[v - 1]`` serves vertex v."""
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u - 1].add(v)
            nbrs[v - 1].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        return _canonical_edge(u, v) in self.edge_set

    def display(self, v: int) -> str:
        if self.names is not None:
            return self.names[v - 1]
        return str(v)

    def induced(self, keep: set[int] | frozenset[int]) -> tuple[Edge, ...]:
        """Edges of the subgraph induced on ``keep`` (which may be anything,
        including sets that would leave vertices isolated)."""
        return tuple(e for e in self.edges if e[0] in keep and e[1] in keep)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges."""

    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        used: set[int] = set()
        for u, v in self.edges:
            if u in used or v in used:
                raise MalformedInput("matching edges must be pairwise disjoint")
            used.add(u)
            used.add(v)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))


# --- parsing --------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse edge-list text or a structured JSON document into a Graph.

    Edge-list format: one edge per line as two 1-based labels separated by
    whitespace, ``#`` starts a comment, and an optional header line
    ``n <count>`` declares the vertex count.  A document starting with
    ``{`` is treated as JSON with fields ``n`` and ``edges`` (and an
    optional ``names`` list).
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_structured(stripped)

    declared_n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared_n is not None or edges:
                raise MalformedInput(
                    f"line {lineno}: header 'n <count>' must come first and only once"
                )
            if len(parts) != 2:
                raise MalformedInput(f"line {lineno}: malformed header {line!r}")
            try:
                declared_n = int(parts[1])
            except ValueError:
                raise MalformedInput(
                    f"line {lineno}: vertex count {parts[1]!r} is not an integer"
                ) from None
            continue
        if len(parts) != 2:
            raise MalformedInput(
                f"line {lineno}: expected two vertex labels, got {line!r}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInput(
                f"line {lineno}: labels must be integers, got {line!r}"
            ) from None
        if u == v:
            raise LoopEdge(f"line {lineno}: loop edge {{{u},{v}}}")
        if u < 1 or v < 1:
            raise MalformedInput(f"line {lineno}: labels must be >= 1")
        edges.append(_canonical_edge(u, v))
    if not edges:
        raise MalformedInput("no edges found in input")
    return Graph.from_edges(edges, vertex_count=declared_n)


def _parse_structured(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON document: {exc}") from None
    if not isinstance(doc, dict) or "edges" not in doc:
        raise MalformedInput("structured document needs an 'edges' field")
    edges = doc["edges"]
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 for e in edges
    ):
        raise MalformedInput("'edges' must be a list of 2-element lists")
    n = doc.get("n")
    if n is not None and not isinstance(n, int):
        raise MalformedInput("'n' must be an integer")
    names = doc.get("names")
    if names is not None:
        names = tuple(str(s) for s in names)
    return Graph.from_edges(edges, vertex_count=n, names=names)


def graph_to_text(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# --- small constructors (used by fixtures and tests) -----------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges([(1, i) for i in range(2, leaves + 2)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges([(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


# --- connectivity and bipartition ------------------------------------------


def connected_components(g: Graph) -> list[frozenset[int]]:
    seen: set[int] = set()
    components: list[frozenset[int]] = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        components.append(frozenset(comp))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The two colour classes (A, B) with |A| <= |B|, or None if not bipartite.

    Per connected component the class containing the component's smallest
    vertex goes to A first; if the assembled A ends up larger the sides are
    swapped, and on a tie A is the side containing vertex 1.  This makes
    downstream poset constructions deterministic.
    """
    color: dict[int, int] = {}
    for comp in connected_components(g):
        start = min(comp)
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    side_a = frozenset(v for v, c in color.items() if c == 0)
    side_b = frozenset(v for v, c in color.items() if c == 1)
    if len(side_a) > len(side_b):
        side_a, side_b = side_b, side_a
    elif len(side_a) == len(side_b) and 1 not in side_a:
        side_a, side_b = side_b, side_a
    return side_a, side_b


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.vertex_count - 1


# --- matchings --------------------------------------------------------------


def matching_number(g: Graph) -> int:
    """The exact maximum matching size.

    Bipartite graphs use augmenting-path search; general graphs fall back
    to branch-and-bound over the edges at a max-degree vertex.  Both routes
    are exact and are cross-checked against a subset oracle in the tests.
    """
    sides = bipartition(g)
    if sides is not None:
        return _bipartite_matching_number(g, sides[0])
    return _general_matching_number(g)


def _bipartite_matching_number(g: Graph, side_a: frozenset[int]) -> int:
    match: dict[int, int] = {}

    def try_augment(a: int, visited: set[int]) -> bool:
        for b in sorted(g.neighbors(a)):
            if b in visited:
                continue
            visited.add(b)
            if b not in match or try_augment(match[b], visited):
                match[b] = a
                return True
        return False

    size = 0
    for a in sorted(side_a):
        if try_augment(a, set()):
            size += 1
    return size


def _general_matching_number(g: Graph) -> int:
    adjacency = g.adjacency

    def recurse(active: frozenset[int], best_known: int, size: int) -> int:
        live = [v for v in active if adjacency[v - 1] & active]
        if not live:
            return size
        # Cheap upper bound: at most half of the live vertices can be matched.
        if size + len(live) // 2 <= best_known:
            return best_known
        v = max(live, key=lambda x: (len(adjacency[x - 1] & active), -x))
        best = recurse(active - {v}, best_known, size)
        for w in sorted(adjacency[v - 1] & active):
            best = max(best, recurse(active - {v, w}, best, size + 1))
        return best

    return recurse(frozenset(g.vertices), 0, 0)


def enumerate_matchings(g: Graph) -> list[Matching]:
    """All matchings of g, the empty one included (exhaustive, test oracle)."""
    edges = g.edges
    out: list[frozenset[Edge]] = []

    def extend(index: int, chosen: list[Edge], used: set[int]) -> None:
        out.append(frozenset(chosen))
        for i in range(index, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            chosen.append(edges[i])
            used.add(u)
            used.add(v)
            extend(i + 1, chosen, used)
            chosen.pop()
            used.discard(u)
            used.discard(v)

    extend(0, [], set())
    return [Matching(e) for e in out]


def enumerate_perfect_matchings(
    g: Graph, budget: SearchBudget | None = None
) -> list[Matching]:
    """All perfect matchings, sorted; empty list if none exist."""
    budget = budget or default_budget()
    budget.check_graph(g.vertex_count, g.edge_count, "enumerate_perfect_matchings")
    if g.vertex_count % 2 == 1:
        return []
    found: list[frozenset[Edge]] = []

    def extend(uncovered: frozenset[int], chosen: list[Edge]) -> None:
        if not uncovered:
            found.append(frozenset(chosen))
            return
        v = min(uncovered)
        for w in sorted(g.neighbors(v)):
            if w in uncovered:
                chosen.append(_canonical_edge(v, w))
                extend(uncovered - {v, w}, chosen)
                chosen.pop()

    extend(frozenset(g.vertices), [])
    return [Matching(e) for e in sorted(found, key=sorted)]


def _has_perfect_matching_on(g: Graph, vertices: tuple[int, ...]) -> bool:
    """Does the induced subgraph on ``vertices`` have a perfect matching?"""
    if len(vertices) % 2 == 1:
        return False
    vset = frozenset(vertices)

    def extend(uncovered: frozenset[int]) -> bool:
        if not uncovered:
            return True
        v = min(uncovered)
        for w in g.neighbors(v):
            if w in uncovered and w in vset:
                if extend(uncovered - {v, w}):
                    return True
        return False

    return extend(vset)


# --- domination and induced matchings --------------------------------------


def paired_domination_number(g: Graph, budget: SearchBudget | None = None) -> int:
    """Minimum size of a dominating set whose induced subgraph has a
    perfect matching, found by exact subset search over even sizes.

    A maximal matching's vertex set always qualifies, so the search
    terminates for every graph without isolated vertices.
    """
    budget = budget or default_budget()
    budget.check_graph(g.vertex_count, g.edge_count, "paired_domination_number")
    n = g.vertex_count
    vertices = tuple(g.vertices)
    for size in range(2, n + 1, 2):
        for subset in combinations(vertices, size):
            chosen = frozenset(subset)
            if not _dominates(g, chosen):
                continue
            if _has_perfect_matching_on(g, subset):
                return size
    raise AssertionError("a paired-dominating set always exists")  # pragma: no cover


def _dominates(g: Graph, chosen: frozenset[int]) -> bool:
    for v in g.vertices:
        if v not in chosen and not (g.neighbors(v) & chosen):
            return False
    return True


def induced_matching_number(g: Graph, budget: SearchBudget | None = None) -> int:
    """Maximum number of pairwise disconnected edges: disjoint edges with no
    edge of g connecting any two of them.

    Equivalent to a maximum independent set in the edge-conflict graph,
    solved by branch and bound.
    """
    budget = budget or default_budget()
    budget.check_graph(g.vertex_count, g.edge_count, "induced_matching_number")
    edges = g.edges
    m = len(edges)
    conflict: list[set[int]] = [set() for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if _edges_connected(g, edges[i], edges[j]):
                conflict[i].add(j)
                conflict[j].add(i)

    best = 0

    def recurse(candidates: list[int], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + len(candidates) <= best:
            return
        for idx, e in enumerate(candidates):
            rest = [f for f in candidates[idx + 1 :] if f not in conflict[e]]
            recurse(rest, size + 1)

    recurse(list(range(m)), 0)
    return best


def _edges_connected(g: Graph, e: Edge, f: Edge) -> bool:
    """True if e and f share a vertex or some edge of g joins them."""
    if set(e) & set(f):
        return True
    return any(g.has_edge(x, y) for x in e for y in f)


# --- misc helpers -----------------------------------------------------------


def check_values(g: Graph, values) -> tuple[int, ...]:
    """Validate that ``values`` is one natural number per vertex."""
    vals = tuple(int(x) for x in values)
    if len(vals) != g.vertex_count:
        raise DimensionMismatch(
            f"expected {g.vertex_count} values, got {len(vals)}"
        )
    if any(x < 0 for x in vals):
        raise MalformedInput("cover values must be non-negative")
    return vals


def require_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    sides = bipartition(g)
    if sides is None:
        raise NotBipartite("operation requires a bipartite graph")
    return sides
