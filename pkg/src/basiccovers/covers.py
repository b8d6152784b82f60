"""k-covers and basic k-covers.

A k-cover assigns a natural number to every vertex so that the two ends of
each edge sum to at least k; it is basic when no strictly smaller
assignment is still a k-cover, equivalently when every vertex with a
positive value lies on an edge summing to exactly k (a tight edge).  The
number of basic k-covers is the Hilbert function of the graded algebra
these covers span, and the growth rate of the basic 2h-cover counts
recovers its Krull dimension.

The enumerator is a depth-first search over vertex values with three exact
prunes (edge feasibility, the value ceiling k, and achievable tightness);
a final basicness filter keeps correctness independent of the pruning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import SearchBudget, default_budget
from .errors import (
    CompletionNotBasic,
    MalformedInput,
    NotACover,
    NotConnected,
    NotDominating,
    SearchBudgetExceeded,
)
from .graph import Graph, check_values, is_connected


@dataclass(frozen=True, order=True)
class Cover:
    """A k-cover: one value per vertex (index v-1 serves vertex v) plus its level."""

    values: tuple[int, ...]
    level: int

    def value(self, v: int) -> int:
        return self.values[v - 1]

    def restrict(self, vertices) -> tuple[int, ...]:
        return tuple(self.values[v - 1] for v in sorted(vertices))

    def to_line(self) -> str:
        return f"k={self.level} " + " ".join(str(x) for x in self.values)

    def __add__(self, other: "Cover") -> "Cover":
        if len(self.values) != len(other.values):
            raise MalformedInput("cannot add covers of different graphs")
        return Cover(
            tuple(a + b for a, b in zip(self.values, other.values)),
            self.level + other.level,
        )


def is_k_cover(g: Graph, values, k: int) -> bool:
    """True iff ``values`` is a nonzero assignment with every edge summing to >= k."""
    vals = check_values(g, values)
    if not any(vals):
        return False
    return all(vals[u - 1] + vals[v - 1] >= k for u, v in g.edges)


def is_basic(g: Graph, cover: Cover) -> bool:
    """True iff every vertex with a positive value has a tight edge.

    Tightness characterises basicness: if some positive vertex has all its
    edge sums strictly above k, decrementing it leaves a smaller k-cover.
    """
    if not is_k_cover(g, cover.values, cover.level):
        raise NotACover(f"values are not a {cover.level}-cover")
    return _is_basic_values(g, cover.values, cover.level)


def _is_basic_values(g: Graph, vals: tuple[int, ...], k: int) -> bool:
    adjacency = g.adjacency
    for v in range(1, g.vertex_count + 1):
        x = vals[v - 1]
        if x == 0:
            continue
        if all(x + vals[w - 1] != k for w in adjacency[v - 1]):
            return False
    return True


def is_decomposable(
    g: Graph, cover: Cover, k: int, budget: SearchBudget | None = None
) -> bool:
    """Does cover split as an h-cover plus a (k-h)-cover with 1 <= h <= k-1?

    Exact search over componentwise-smaller candidates; splits involving a
    0-cover are the business of :func:`is_basic`, not this predicate.
    """
    if not is_k_cover(g, cover.values, k):
        raise NotACover(f"values are not a {k}-cover")
    if k < 2:
        return False
    vals = cover.values
    space = 1
    for x in vals:
        space *= x + 1
        if space > 4_000_000:
            raise SearchBudgetExceeded(
                "is_decomposable: candidate space exceeds 4e6 assignments"
            )
    n = g.vertex_count
    beta = [0] * n

    def feasible_split() -> bool:
        beta_min = min(beta[u - 1] + beta[v - 1] for u, v in g.edges)
        gamma_min = min(
            (vals[u - 1] - beta[u - 1]) + (vals[v - 1] - beta[v - 1])
            for u, v in g.edges
        )
        if not any(beta) or not any(vals[i] - beta[i] for i in range(n)):
            return False
        # beta is an h-cover iff h <= beta_min; the complement needs k-h <= gamma_min.
        return max(1, k - gamma_min) <= min(k - 1, beta_min)

    def search(i: int) -> bool:
        if i == n:
            return feasible_split()
        for x in range(vals[i] + 1):
            beta[i] = x
            if search(i + 1):
                return True
        beta[i] = 0
        return False

    return search(0)


# --- exact enumeration -------------------------------------------------------


def _search_order(g: Graph) -> list[int]:
    """Vertex order for the DFS: start at a maximum-degree vertex, then always
    take the unassigned vertex with the most assigned neighbours (ties by
    degree, then label).  Keeps every new vertex edge-constrained as soon
    as its component has been entered."""
    n = g.vertex_count
    order: list[int] = []
    placed = [False] * (n + 1)
    assigned_nbrs = [0] * (n + 1)
    for _ in range(n):
        best = None
        best_key = None
        for v in range(1, n + 1):
            if placed[v]:
                continue
            key = (assigned_nbrs[v], g.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed[best] = True
        for w in g.neighbors(best):
            assigned_nbrs[w] += 1
    return order


def _run_basic_cover_search(g: Graph, k: int, collect: bool):
    """Shared DFS behind enumeration and counting.

    Returns a count when ``collect`` is false, else the list of value
    tuples.  Basicness bounds every value by k, each newly assigned vertex
    must keep its edges feasible, and a vertex whose neighbourhood is fully
    assigned must either be zero or own a tight edge.
    """
    n = g.vertex_count
    order = _search_order(g)
    position = {v: i for i, v in enumerate(order)}
    # 0-based neighbour lists in search order.
    nbrs: list[list[int]] = [
        [position[w] for w in g.neighbors(order[i])] for i in range(n)
    ]
    unassigned_nbrs = [len(nbrs[i]) for i in range(n)]
    values = [-1] * n
    count = 0
    found: list[tuple[int, ...]] = []

    def tight(i: int) -> bool:
        x = values[i]
        return any(values[j] >= 0 and x + values[j] == k for j in nbrs[i])

    def assign(i: int) -> None:
        nonlocal count
        if i == n:
            vals = tuple(values[position[v]] for v in range(1, n + 1))
            if _is_basic_values(g, vals, k):
                if collect:
                    found.append(vals)
                else:
                    count += 1
            return
        lo = 0
        for j in nbrs[i]:
            if values[j] >= 0:
                lo = max(lo, k - values[j])
        if lo > k:
            return
        for x in range(lo, k + 1):
            values[i] = x
            for j in nbrs[i]:
                unassigned_nbrs[j] -= 1
            # A vertex with no unassigned neighbours left can never gain a
            # tight edge later; positive values must be tight already.
            ok = not (x > 0 and unassigned_nbrs[i] == 0 and not tight(i))
            if ok:
                for j in nbrs[i]:
                    if (
                        values[j] > 0
                        and unassigned_nbrs[j] == 0
                        and not tight(j)
                    ):
                        ok = False
                        break
            if ok:
                assign(i + 1)
            for j in nbrs[i]:
                unassigned_nbrs[j] += 1
        values[i] = -1

    assign(0)
    return found if collect else count


def enumerate_basic_covers(
    g: Graph, k: int, budget: SearchBudget | None = None
) -> list[Cover]:
    """Exactly the basic k-covers of g, sorted lexicographically."""
    if k < 1:
        raise MalformedInput(f"cover level must be >= 1, got {k}")
    budget = budget or default_budget()
    budget.check_graph(g.vertex_count, g.edge_count, "enumerate_basic_covers")
    found = _run_basic_cover_search(g, k, collect=True)
    return [Cover(vals, k) for vals in sorted(found)]


def count_basic_covers(g: Graph, k: int, budget: SearchBudget | None = None) -> int:
    budget = budget or default_budget()
    budget.check_graph(g.vertex_count, g.edge_count, "count_basic_covers")
    return _run_basic_cover_search(g, k, collect=False)


def hilbert_function(g: Graph, k: int, budget: SearchBudget | None = None) -> int:
    """Number of basic k-covers; 1 at k = 0 for the unit of the graded algebra."""
    if k < 0:
        raise MalformedInput(f"level must be >= 0, got {k}")
    if k == 0:
        return 1
    return count_basic_covers(g, k, budget)


# --- the low-half reconstruction ---------------------------------------------


def reconstruct_from_low_half(g: Graph, k: int, partial: dict[int, int]) -> Cover:
    """Complete values given on the vertices where a basic k-cover is <= k/2.

    Those vertices always form a dominating set and force every remaining
    vertex w to ``max(k - value(v))`` over its assigned neighbours v; the
    completion is checked to be a basic k-cover.
    """
    if k < 1:
        raise MalformedInput(f"cover level must be >= 1, got {k}")
    domain = set(partial)
    if not domain or not domain <= set(g.vertices):
        raise MalformedInput("partial assignment must live on vertices of g")
    for v, x in partial.items():
        if x < 0 or 2 * x > k:
            raise MalformedInput(
                f"value {x} at vertex {v} is not in the low half [0, {k}/2]"
            )
    for w in g.vertices:
        if w not in domain and not (g.neighbors(w) & domain):
            raise NotDominating(f"vertex {w} has no neighbour in the assigned set")
    values = []
    for w in g.vertices:
        if w in domain:
            values.append(partial[w])
        else:
            values.append(max(k - partial[v] for v in g.neighbors(w) if v in domain))
    cover = Cover(tuple(values), k)
    if not is_k_cover(g, cover.values, k) or not _is_basic_values(g, cover.values, k):
        raise CompletionNotBasic(
            "the forced completion is not a basic k-cover"
        )
    return cover


def low_half_vertices(cover: Cover) -> dict[int, int]:
    """The restriction of a cover to its vertices with value <= k/2."""
    k = cover.level
    return {
        v: x for v, x in enumerate(cover.values, start=1) if 2 * x <= k
    }


# --- Krull dimension from the Hilbert data -----------------------------------


@dataclass(frozen=True)
class HilbertData:
    """Counts of basic 2h-covers with the fitted polynomial degree.

    ``counts[h]`` is the number of basic 2h-covers (``counts[0]`` is 1 for
    the unit).  When ``stable`` the counts eventually grow as a polynomial
    of degree ``fitted_degree`` and the algebra dimension is that degree
    plus one.
    """

    counts: tuple[int, ...]
    fitted_degree: int
    stable: bool

    @property
    def dimension(self) -> int | None:
        return self.fitted_degree + 1 if self.stable else None


def finite_differences(seq: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(b - a for a, b in zip(seq, seq[1:]))


def krull_dimension_estimate(
    g: Graph,
    max_h: int = 8,
    window: int = 3,
    budget: SearchBudget | None = None,
) -> HilbertData:
    """Fit the eventual polynomial degree of the basic 2h-cover counts.

    Computes counts for h = 0..max_h and reports the least d whose d-th
    finite differences are constant and nonzero over the last ``window``
    values.  The counts are only eventually polynomial, which is why the
    check looks at the tail; with no stabilising level the result is marked
    unstable rather than guessed.
    """
    if window < 1 or max_h < window + 2:
        raise MalformedInput("need max_h >= window + 2 and window >= 1")
    if not is_connected(g):
        raise NotConnected("dimension estimation requires a connected graph")
    counts = [1]
    for h in range(1, max_h + 1):
        counts.append(hilbert_function(g, 2 * h, budget))
    seq = tuple(counts)
    diffs = seq
    for degree in range(0, max_h):
        tail = diffs[-window:]
        if len(diffs) >= window and len(set(tail)) == 1 and tail[0] != 0:
            return HilbertData(seq, degree, True)
        diffs = finite_differences(diffs)
    return HilbertData(seq, 0, False)
