"""Free parameter sets and the graphical dimension.

An ordered independent set a_1..a_r with partners b_1..b_r is a free
parameter set when every {a_i, b_i} is an edge and {a_i, b_j} being an
edge forces i <= j; the graphical dimension is the maximum r plus one.
The search appends pairs, which preserves the triangular condition
incrementally: a new a may touch no earlier a (independence) and no
earlier b.  Validity depends on the ordering, so the search ranges over
ordered sequences, pruned by the matching number of the untouched
remainder of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import SearchBudget, default_budget
from .errors import MalformedInput, NotATree
from .graph import Graph, is_tree, matching_number


@dataclass(frozen=True)
class FreeParameterCertificate:
    """An ordered free parameter set with its partner set."""

    a_seq: tuple[int, ...]
    b_seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.a_seq) != len(self.b_seq):
            raise MalformedInput("a and b sequences must have equal length")

    def __len__(self) -> int:
        return len(self.a_seq)

    def to_lines(self) -> list[str]:
        return [
            "A: " + " ".join(str(v) for v in self.a_seq),
            "B: " + " ".join(str(v) for v in self.b_seq),
        ]


def is_free_parameter_set(g: Graph, cert: FreeParameterCertificate) -> bool:
    """Check all four conditions: a-side independent, disjoint from the
    b-side, paired along edges, and triangular ({a_i,b_j} in E forces i <= j)."""
    a, b = cert.a_seq, cert.b_seq
    vertices = set(g.vertices)
    if not a or len(set(a)) != len(a) or len(set(b)) != len(b):
        return False
    if not (set(a) <= vertices and set(b) <= vertices):
        return False
    if set(a) & set(b):
        return False
    for i, ai in enumerate(a):
        for aj in a[i + 1 :]:
            if g.has_edge(ai, aj):
                return False
    for i, (ai, bi) in enumerate(zip(a, b)):
        if not g.has_edge(ai, bi):
            return False
        for j, bj in enumerate(b):
            if g.has_edge(ai, bj) and i > j:
                return False
    return True


@dataclass(frozen=True)
class GdimResult:
    gdim: int
    certificate: FreeParameterCertificate


def graphical_dimension(g: Graph, budget: SearchBudget | None = None) -> GdimResult:
    """Exact maximum free parameter set size plus one, with a witness.

    Backtracking over ordered (a, b) extensions; a branch is cut when the
    current length plus the matching number of the untouched vertices can
    no longer beat the incumbent, and the search stops early at the
    matching-number ceiling.
    """
    if g.edge_count == 0:
        raise MalformedInput("graphical dimension needs at least one edge")
    budget = budget or default_budget()
    budget.check_graph(g.vertex_count, g.edge_count, "graphical_dimension")
    ceiling = matching_number(g)

    best_len = 0
    u, v = g.edges[0]
    best_cert = FreeParameterCertificate((u,), (v,))

    residual_bound_cache: dict[frozenset[int], int] = {}

    def residual_bound(used: frozenset[int]) -> int:
        """Matching number of the subgraph untouched by used vertices; every
        further (a, b) pair consumes one of its edges."""
        remaining = frozenset(g.vertices) - used
        if remaining not in residual_bound_cache:
            sub_edges = g.induced(remaining)
            if sub_edges:
                touched = sorted({x for e in sub_edges for x in e})
                relabel = {v: i + 1 for i, v in enumerate(touched)}
                sub = Graph.from_edges(
                    [(relabel[x], relabel[y]) for x, y in sub_edges],
                    vertex_count=len(touched),
                )
                residual_bound_cache[remaining] = matching_number(sub)
            else:
                residual_bound_cache[remaining] = 0
        return residual_bound_cache[remaining]

    def extend(a_seq: list[int], b_seq: list[int], used: frozenset[int]) -> None:
        nonlocal best_len, best_cert
        r = len(a_seq)
        if r > best_len:
            best_len = r
            best_cert = FreeParameterCertificate(tuple(a_seq), tuple(b_seq))
        if best_len == ceiling or r + residual_bound(used) <= best_len:
            return
        for a in g.vertices:
            if a in used:
                continue
            # The new a may be adjacent to no chosen a (independence) and no
            # chosen b (the triangular condition with i > j).
            if any(g.has_edge(a, x) for x in a_seq) or any(
                g.has_edge(a, x) for x in b_seq
            ):
                continue
            for b in sorted(g.neighbors(a)):
                if b in used:
                    continue
                a_seq.append(a)
                b_seq.append(b)
                extend(a_seq, b_seq, used | {a, b})
                a_seq.pop()
                b_seq.pop()

    extend([], [], frozenset())
    return GdimResult(best_len + 1, best_cert)


@dataclass(frozen=True)
class GdimBounds:
    lower: int  # half the paired domination number, plus one
    upper: int  # the matching number plus one


def gdim_bounds(g: Graph, budget: SearchBudget | None = None) -> GdimBounds:
    from .graph import paired_domination_number

    gamma_p = paired_domination_number(g, budget)
    nu = matching_number(g)
    return GdimBounds(gamma_p // 2 + 1, nu + 1)


def tree_gdim(g: Graph, budget: SearchBudget | None = None) -> int:
    """For trees the dimension collapses to the matching number plus one;
    cross-checked against the full search while the tree is within budget."""
    if not is_tree(g):
        raise NotATree("tree_gdim requires a connected graph with n-1 edges")
    budget = budget or default_budget()
    value = matching_number(g) + 1
    if g.vertex_count <= budget.max_vertices and g.edge_count <= budget.max_edges:
        full = graphical_dimension(g, budget).gdim
        if full != value:  # pragma: no cover
            raise AssertionError(
                f"tree formula {value} disagrees with search {full}"
            )
    return value
