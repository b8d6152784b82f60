"""Right edges, the weak square condition, and the projection that collapses
complete-bipartite blocks of right edges to single vertices.

An edge {i,j} is right when every neighbour of i is adjacent to every
neighbour of j; equivalently every basic k-cover sums to exactly k across
it.  The right-edge subgraph decomposes into complete bipartite blocks
plus isolated vertices, the projection contracts each block side to one
vertex, and basic covers transport bijectively across the contraction.
On top of the projection sit the two summary reports: the equivalence of
the combinatorial Cohen-Macaulay certificates for WSC graphs, and the
regularity bounds for the edge ideal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import SearchBudget, default_budget
from .complexes import independence_complex, is_shellable, is_strongly_connected
from .covers import Cover
from .errors import (
    EquivalenceViolation,
    NotAnEdge,
    NotConstantOnBlock,
    NotWsc,
    NotWscFixedPoint,
    OrderViolation,
    SearchBudgetExceeded,
    StructureViolation,
)
from .gdim import graphical_dimension
from .graph import (
    Edge,
    Graph,
    enumerate_perfect_matchings,
    induced_matching_number,
    is_bipartite,
)


def is_right_edge(g: Graph, e: Edge) -> bool:
    """True iff for all neighbours i' of i and j' of j the pair {i',j'} is an
    edge (coincident neighbours i' = j' would force a loop, so they refute
    rightness).  Choices i' = j or j' = i hold trivially and are skipped."""
    i, j = e
    if not g.has_edge(i, j):
        raise NotAnEdge(f"{{{i},{j}}} is not an edge")
    for ip in g.neighbors(i) - {j}:
        for jp in g.neighbors(j) - {i}:
            if ip == jp or not g.has_edge(ip, jp):
                return False
    return True


def right_edges(g: Graph) -> tuple[Edge, ...]:
    return tuple(e for e in g.edges if is_right_edge(g, e))


def satisfies_wsc(g: Graph) -> bool:
    """Weak square condition: every vertex lies on a right edge."""
    covered: set[int] = set()
    for e in right_edges(g):
        covered.update(e)
    return len(covered) == g.vertex_count


@dataclass(frozen=True)
class ZeroOneGraph:
    """The right-edge subgraph with its validated block decomposition:
    complete bipartite pieces (A_i, B_i) with |A_i| <= |B_i| and the
    vertices on no right edge as singletons."""

    host: Graph
    right: tuple[Edge, ...]
    pairs: tuple[tuple[frozenset[int], frozenset[int]], ...]
    singletons: tuple[int, ...]


def zero_one_graph(g: Graph) -> ZeroOneGraph:
    rights = right_edges(g)
    right_adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for u, v in rights:
        right_adj[u].add(v)
        right_adj[v].add(u)
    on_right = {v for v in g.vertices if right_adj[v]}
    singletons = tuple(sorted(set(g.vertices) - on_right))

    pairs: list[tuple[frozenset[int], frozenset[int]]] = []
    seen: set[int] = set()
    for start in sorted(on_right):
        if start in seen:
            continue
        # 2-colour the right-edge component and verify complete bipartiteness.
        color = {start: 0}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in right_adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    raise StructureViolation(
                        "right-edge component is not bipartite"
                    )
        side0 = frozenset(v for v, c in color.items() if c == 0)
        side1 = frozenset(v for v, c in color.items() if c == 1)
        for u in side0:
            if right_adj[u] != set(side1):
                raise StructureViolation(
                    "right-edge component is not complete bipartite"
                )
        seen |= set(color)
        if len(side0) > len(side1) or (
            len(side0) == len(side1) and min(side1) < min(side0)
        ):
            side0, side1 = side1, side0
        pairs.append((side0, side1))
    pairs.sort(key=lambda p: min(min(p[0]), min(p[1])))
    return ZeroOneGraph(g, rights, tuple(pairs), singletons)


@dataclass(frozen=True)
class ProjectionReport:
    """The projected graph with the block-to-vertex correspondence.

    Blocks are numbered by the smallest original vertex they contain;
    ``block_of[v - 1]`` is the projected label of the host vertex v.
    """

    host: Graph
    pi_graph: Graph
    blocks: tuple[frozenset[int], ...]
    block_of: tuple[int, ...]
    is_fixed_point: bool


def project(g: Graph) -> ProjectionReport:
    decomposition = zero_one_graph(g)
    raw_blocks: list[frozenset[int]] = []
    for side_a, side_b in decomposition.pairs:
        raw_blocks.append(side_a)
        raw_blocks.append(side_b)
    raw_blocks.extend(frozenset({v}) for v in decomposition.singletons)
    blocks = tuple(sorted(raw_blocks, key=min))

    block_of = [0] * g.vertex_count
    for label, members in enumerate(blocks, start=1):
        for v in members:
            block_of[v - 1] = label

    pi_edges: set[Edge] = set()
    for u, v in g.edges:
        bu, bv = block_of[u - 1], block_of[v - 1]
        if bu == bv:
            # Block sides are independent in g; an internal edge would
            # project to a loop, so it can only mean a broken decomposition.
            raise StructureViolation(
                f"edge {{{u},{v}}} joins two vertices of one block"
            )
        pi_edges.add((min(bu, bv), max(bu, bv)))
    names = tuple(
        "+".join(str(v) for v in sorted(members)) for members in blocks
    )
    pi_graph = Graph.from_edges(pi_edges, vertex_count=len(blocks), names=names)
    fixed = all(len(members) == 1 for members in blocks) and pi_graph.edges == g.edges
    return ProjectionReport(g, pi_graph, blocks, tuple(block_of), fixed)


# --- cover transport -----------------------------------------------------------


def project_cover(report: ProjectionReport, cover: Cover) -> Cover:
    """The corresponding cover of the projected graph (basic covers are
    constant on blocks; a non-constant input is rejected)."""
    values = []
    for members in report.blocks:
        vals = {cover.values[v - 1] for v in members}
        if len(vals) != 1:
            raise NotConstantOnBlock(
                f"cover takes several values on block {sorted(members)}"
            )
        values.append(vals.pop())
    return Cover(tuple(values), cover.level)


def lift_cover(report: ProjectionReport, cover: Cover) -> Cover:
    """The host-graph cover obtained by repeating each block value."""
    values = [0] * report.host.vertex_count
    for label, members in enumerate(report.blocks, start=1):
        for v in members:
            values[v - 1] = cover.values[label - 1]
    return Cover(tuple(values), cover.level)


# --- the unique matching of a WSC fixed point -----------------------------------


@dataclass(frozen=True)
class UniquePmLabeling:
    """The unique right-edge perfect matching of a projection fixed point,
    oriented and ordered: pair i is (u_i, v_i), the v-side is independent,
    and v_i precedes v_j exactly when {u_i, v_j} is an edge.  Pairs are
    listed in a linear extension of that order."""

    pairs: tuple[tuple[int, int], ...]
    precedes: frozenset[tuple[int, int]]  # (v_i, v_j) pairs, i != j


def unique_pm_labeling(g: Graph) -> UniquePmLabeling:
    report = project(g)
    if not satisfies_wsc(g) or not report.is_fixed_point:
        raise NotWscFixedPoint(
            "operation requires a WSC graph fixed by the projection"
        )
    rights = right_edges(g)
    partner: dict[int, int] = {}
    for u, v in rights:
        if u in partner or v in partner:
            raise NotWscFixedPoint("right edges do not form a perfect matching")
        partner[u] = v
        partner[v] = u
    if len(partner) != g.vertex_count:
        raise NotWscFixedPoint("right edges do not form a perfect matching")

    # Orient each pair, then repair v-side adjacencies: whenever the least j
    # has an edge {v_i, v_j} with i < j, u_j can safely swap with v_j.
    pairs = [(u, v) for u, v in sorted(rights)]
    for _ in range(len(pairs) ** 2 + 1):
        violation = None
        for j in range(len(pairs)):
            if any(
                g.has_edge(pairs[i][1], pairs[j][1]) for i in range(j)
            ):
                violation = j
                break
        if violation is None:
            break
        u, v = pairs[violation]
        pairs[violation] = (v, u)
    else:  # pragma: no cover
        raise OrderViolation("could not make the v-side independent")

    vs = [v for _, v in pairs]
    if any(g.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))):
        raise OrderViolation("v-side failed to become independent")  # pragma: no cover

    relation: set[tuple[int, int]] = set()
    for i, (ui, vi) in enumerate(pairs):
        for j, (uj, vj) in enumerate(pairs):
            if i != j and g.has_edge(ui, vj):
                relation.add((vi, vj))
    for vi, vj in relation:
        if (vj, vi) in relation:
            raise OrderViolation(
                f"precedence between {vi} and {vj} runs both ways"
            )

    # Relabel pairs along a linear extension of the precedence order.
    remaining = list(pairs)
    ordered: list[tuple[int, int]] = []
    while remaining:
        free = [
            p
            for p in remaining
            if not any(
                (q[1], p[1]) in relation for q in remaining if q is not p
            )
        ]
        if not free:  # pragma: no cover
            raise OrderViolation("precedence relation contains a cycle")
        nxt = min(free)
        ordered.append(nxt)
        remaining.remove(nxt)
    return UniquePmLabeling(tuple(ordered), frozenset(relation))


# --- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class CmEquivalenceReport:
    """Verdicts for the equivalent characterisations of Cohen-Macaulayness of
    a WSC graph.  Each computed condition is True/False, or None when its
    search budget was exhausted; ``cohen_macaulay`` is never computed from
    the ring, it repeats the common verdict the equivalence implies."""

    unique_perfect_matching: bool | None
    unique_right_edge_perfect_matching: bool | None
    projection_fixed_point: bool | None
    independence_complex_shellable: bool | None
    connected_in_codimension_one: bool | None
    cohen_macaulay: bool | None
    skip_reasons: tuple[str, ...]

    def computed(self) -> dict[str, bool]:
        out = {
            "unique_perfect_matching": self.unique_perfect_matching,
            "unique_right_edge_perfect_matching": self.unique_right_edge_perfect_matching,
            "projection_fixed_point": self.projection_fixed_point,
            "independence_complex_shellable": self.independence_complex_shellable,
            "connected_in_codimension_one": self.connected_in_codimension_one,
        }
        return {k: v for k, v in out.items() if v is not None}


def cm_equivalence_report(
    g: Graph, budget: SearchBudget | None = None
) -> CmEquivalenceReport:
    if not satisfies_wsc(g):
        raise NotWsc("the equivalence report applies to WSC graphs")
    budget = budget or default_budget()
    skips: list[str] = []

    def guarded(name, thunk):
        try:
            return thunk()
        except SearchBudgetExceeded as exc:
            skips.append(f"{name}: {exc}")
            return None

    unique_pm = guarded(
        "unique_perfect_matching",
        lambda: len(enumerate_perfect_matchings(g, budget)) == 1,
    )
    unique_right_pm = guarded(
        "unique_right_edge_perfect_matching",
        lambda: _count_right_perfect_matchings(g, budget) == 1,
    )
    fixed_point = project(g).is_fixed_point

    complex_ = guarded("independence_complex", lambda: independence_complex(g, budget))
    if complex_ is None:
        shellable = None
        connected = None
    else:
        if complex_.is_pure:
            shellable = guarded(
                "independence_complex_shellable", lambda: is_shellable(complex_, budget)
            )
            connected = is_strongly_connected(complex_)
        else:
            # Facets of several dimensions rule out both certificates.
            shellable = False
            connected = False

    report = CmEquivalenceReport(
        unique_perfect_matching=unique_pm,
        unique_right_edge_perfect_matching=unique_right_pm,
        projection_fixed_point=fixed_point,
        independence_complex_shellable=shellable,
        connected_in_codimension_one=connected,
        cohen_macaulay=None,
        skip_reasons=tuple(skips),
    )
    verdicts = set(report.computed().values())
    if len(verdicts) > 1:
        raise EquivalenceViolation(
            f"equivalent conditions disagree: {report.computed()}"
        )
    common = verdicts.pop() if verdicts else None
    return CmEquivalenceReport(
        unique_perfect_matching=report.unique_perfect_matching,
        unique_right_edge_perfect_matching=report.unique_right_edge_perfect_matching,
        projection_fixed_point=report.projection_fixed_point,
        independence_complex_shellable=report.independence_complex_shellable,
        connected_in_codimension_one=report.connected_in_codimension_one,
        cohen_macaulay=common,
        skip_reasons=report.skip_reasons,
    )


def _count_right_perfect_matchings(g: Graph, budget: SearchBudget) -> int:
    rights = right_edges(g)
    if not rights:
        return 0
    right_graph_edges = set(rights)
    # Perfect matchings of g drawn from right edges only.
    matchings = [
        m
        for m in enumerate_perfect_matchings(g, budget)
        if set(m.edges) <= right_graph_edges
    ]
    return len(matchings)


@dataclass(frozen=True)
class RegularityReport:
    """Bounds for the Castelnuovo-Mumford regularity of the edge ideal:
    the induced matching number from below, the graphical dimension minus
    one from above, and the exact value (equal to the induced matching
    number) when the graph is bipartite and satisfies the WSC."""

    induced_matching: int
    projection_induced_matching: int
    upper_bound: int
    exact: int | None


def regularity_report(g: Graph, budget: SearchBudget | None = None) -> RegularityReport:
    budget = budget or default_budget()
    induced = induced_matching_number(g, budget)
    pi = project(g).pi_graph
    induced_pi = induced_matching_number(pi, budget)
    upper = graphical_dimension(g, budget).gdim - 1
    exact = induced if (is_bipartite(g) and satisfies_wsc(g)) else None
    return RegularityReport(induced, induced_pi, upper, exact)


__all__ = [
    "CmEquivalenceReport",
    "ProjectionReport",
    "RegularityReport",
    "UniquePmLabeling",
    "ZeroOneGraph",
    "cm_equivalence_report",
    "is_right_edge",
    "lift_cover",
    "project",
    "project_cover",
    "regularity_report",
    "right_edges",
    "satisfies_wsc",
    "unique_pm_labeling",
    "zero_one_graph",
]
