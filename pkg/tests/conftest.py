"""Shared graph generators and independent brute-force oracles.

The oracles deliberately avoid the production code paths they check:
basic covers come from a full product scan with single-step descent,
matchings from exhaustive enumeration, and free parameter sets from
permutation search.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest

from basiccovers.covers import is_k_cover
from basiccovers.fixtures import FIXTURE_NAMES, corpus, verify_corpus
from basiccovers.graph import Graph


@pytest.fixture(scope="session", autouse=True)
def _corpus_integrity():
    verify_corpus()


@pytest.fixture(scope="session")
def fixtures() -> dict[str, Graph]:
    return dict(corpus())


def fixture_items():
    return [(name, corpus()[name]) for name in FIXTURE_NAMES]


# --- random generators (all deterministic via explicit seeds) ---------------


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus a few extra edges."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = order[i], order[j]
        edges.add((min(u, v), max(u, v)))
    for _ in range(rng.randrange(0, n)):
        u, v = rng.sample(range(1, n + 1), 2)
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(edges, vertex_count=n)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random tree from a Pruefer sequence."""
    if n == 2:
        return Graph.from_edges([(1, 2)])
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(1, n + 1) if degree[v] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            import bisect

            bisect.insort(leaves, v)
    u, v = leaves
    edges.append((min(u, v), max(u, v)))
    return Graph.from_edges(edges, vertex_count=n)


def random_bipartite_graph(rng: random.Random, n: int) -> Graph:
    """Random bipartite graph without isolated vertices (not always connected)."""
    a = rng.randint(1, max(1, n // 2))
    b = n - a
    while True:
        edges = set()
        for i in range(1, a + 1):
            for j in range(a + 1, n + 1):
                if rng.random() < 0.5:
                    edges.add((i, j))
        covered = {v for e in edges for v in e}
        if len(covered) == n and edges:
            return Graph.from_edges(edges, vertex_count=n)
        # Resample rather than patching, to keep the distribution simple.
        if b == 0:
            raise AssertionError("unreachable")


def whiskered(core: Graph, doubled: tuple[int, ...] = ()) -> Graph:
    """Attach one pendant leaf to every core vertex (two to ``doubled``).

    Pendant edges always satisfy the square condition, so the result is a
    WSC graph regardless of the core.
    """
    edges = list(core.edges)
    next_label = core.vertex_count + 1
    for v in core.vertices:
        edges.append((v, next_label))
        next_label += 1
        if v in doubled:
            edges.append((v, next_label))
            next_label += 1
    return Graph.from_edges(edges, vertex_count=next_label - 1)


# --- oracles -----------------------------------------------------------------


def brute_force_basic_covers(g: Graph, k: int) -> list[tuple[int, ...]]:
    """Scan {0..k}^n; keep k-covers no single decrement of which stays one."""
    out = []
    n = g.vertex_count
    for vals in product(range(k + 1), repeat=n):
        if not is_k_cover(g, vals, k):
            continue
        minimal = True
        for i in range(n):
            if vals[i] == 0:
                continue
            dec = vals[:i] + (vals[i] - 1,) + vals[i + 1 :]
            if any(dec) and is_k_cover(g, dec, k):
                minimal = False
                break
        if minimal:
            out.append(vals)
    return sorted(out)


def brute_force_matching_number(g: Graph) -> int:
    """Largest matching over exhaustive edge-subset enumeration."""
    best = 0

    def extend(idx: int, used: set[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        for i in range(idx, len(g.edges)):
            u, v = g.edges[i]
            if u not in used and v not in used:
                extend(i + 1, used | {u, v}, size + 1)

    extend(0, set(), 0)
    return best


def brute_force_paired_domination(g: Graph) -> int:
    from basiccovers.graph import _dominates, _has_perfect_matching_on

    n = g.vertex_count
    best = None
    for size in range(2, n + 1, 2):
        for subset in combinations(g.vertices, size):
            if _dominates(g, frozenset(subset)) and _has_perfect_matching_on(g, subset):
                return size
    return best


def brute_force_gdim(g: Graph) -> int:
    """Try every ordered vertex sequence pair (tiny graphs only)."""
    from basiccovers.gdim import FreeParameterCertificate, is_free_parameter_set

    n = g.vertex_count
    best = 0
    verts = list(g.vertices)
    for r in range(1, n // 2 + 1):
        for a_seq in permutations(verts, r):
            for b_seq in permutations([v for v in verts if v not in a_seq], r):
                cert = FreeParameterCertificate(a_seq, b_seq)
                if is_free_parameter_set(g, cert):
                    best = max(best, r)
    return best + 1
