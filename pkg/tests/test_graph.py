import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from basiccovers.errors import (
    DimensionMismatch,
    IsolatedVertex,
    LoopEdge,
    MalformedInput,
    SearchBudgetExceeded,
)
from basiccovers.graph import (
    Graph,
    Matching,
    bipartition,
    check_values,
    complete_bipartite,
    cycle_graph,
    enumerate_matchings,
    enumerate_perfect_matchings,
    graph_to_text,
    induced_matching_number,
    is_connected,
    matching_number,
    paired_domination_number,
    parse_graph,
    path_graph,
    star_graph,
)
from basiccovers.budget import SearchBudget

from conftest import (
    brute_force_matching_number,
    brute_force_paired_domination,
    fixture_items,
    random_connected_graph,
)


# --- parsing ---------------------------------------------------------------


def test_parse_single_edge():
    g = parse_graph("1 2")
    assert g.vertex_count == 2
    assert g.edges == ((1, 2),)


def test_parse_path_lines():
    g = parse_graph("1 2\n2 3\n3 4\n4 5\n5 6\n")
    assert g.edges == path_graph(6).edges


def test_parse_rejects_loop():
    with pytest.raises(LoopEdge):
        parse_graph("1 1")


def test_parse_comments_and_header():
    g = parse_graph("# a square\nn 4\n1 2\n2 3\n3 4\n1 4\n")
    assert g.vertex_count == 4
    assert g.edge_count == 4


def test_parse_rejects_isolated_vertex():
    with pytest.raises(IsolatedVertex):
        parse_graph("n 3\n1 2\n")
    with pytest.raises(IsolatedVertex):
        parse_graph("1 3")  # vertex 2 implied but never used


def test_parse_rejects_garbage():
    with pytest.raises(MalformedInput):
        parse_graph("1 2 3")
    with pytest.raises(MalformedInput):
        parse_graph("one two")
    with pytest.raises(MalformedInput):
        parse_graph("")


def test_parse_structured_document():
    g = parse_graph('{"n": 3, "edges": [[1, 2], [2, 3]]}')
    assert g.edges == ((1, 2), (2, 3))
    with pytest.raises(MalformedInput):
        parse_graph('{"edges": "nope"}')


def test_duplicate_edges_collapse():
    g = Graph.from_edges([(1, 2), (2, 1)])
    assert g.edges == ((1, 2),)


def test_round_trip_through_text():
    for _, g in fixture_items():
        assert parse_graph(graph_to_text(g)).edges == g.edges


def test_check_values_rejects_wrong_length():
    with pytest.raises(DimensionMismatch):
        check_values(path_graph(3), (1, 0))


# --- bipartition -------------------------------------------------------------


def test_bipartition_c4_tie_break():
    assert bipartition(cycle_graph(4)) == (frozenset({1, 3}), frozenset({2, 4}))


def test_bipartition_odd_cycle_absent():
    assert bipartition(cycle_graph(5)) is None


def test_bipartition_e7(fixtures):
    assert bipartition(fixtures["E7"]) == (
        frozenset({1, 2, 3}),
        frozenset({4, 5, 6, 7}),
    )


def test_bipartition_smaller_side_first():
    rng = random.Random(11)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 9))
        sides = bipartition(g)
        if sides is None:
            continue
        a, b = sides
        assert len(a) <= len(b)
        assert a | b == set(g.vertices)
        assert all(not g.has_edge(u, v) for u in a for v in a if u < v)


# --- connectivity -------------------------------------------------------------


def test_connectivity():
    assert is_connected(path_graph(6))
    two_edges = Graph.from_edges([(1, 2), (3, 4)])
    assert not is_connected(two_edges)


# --- matchings ----------------------------------------------------------------


def test_matching_number_fixtures(fixtures):
    expected = {"K2": 1, "P6": 3, "STAR3": 1, "C4": 2, "C5": 2, "C6": 3,
                "K23": 2, "E7": 3, "E8": 4}
    for name, nu in expected.items():
        assert matching_number(fixtures[name]) == nu, name


def test_matching_number_oracle_equivalence():
    rng = random.Random(3)
    graphs = [g for _, g in fixture_items()]
    graphs += [random_connected_graph(rng, rng.randint(2, 9)) for _ in range(200)]
    for g in graphs:
        assert matching_number(g) == brute_force_matching_number(g)


def test_matching_validation():
    with pytest.raises(MalformedInput):
        Matching(frozenset({(1, 2), (2, 3)}))


def test_perfect_matchings():
    assert [m.sorted_edges() for m in enumerate_perfect_matchings(path_graph(6))] == [
        ((1, 2), (3, 4), (5, 6))
    ]
    assert [m.sorted_edges() for m in enumerate_perfect_matchings(cycle_graph(4))] == [
        ((1, 2), (3, 4)),
        ((1, 4), (2, 3)),
    ]
    assert enumerate_perfect_matchings(Graph.from_edges([(1, 2)]))[0].sorted_edges() == ((1, 2),)
    assert enumerate_perfect_matchings(cycle_graph(5)) == []


def test_perfect_matchings_cover_everything():
    rng = random.Random(5)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 8))
        for m in enumerate_perfect_matchings(g):
            assert m.covered == frozenset(g.vertices)


# --- domination and induced matchings ------------------------------------------


def test_paired_domination_fixtures(fixtures):
    assert paired_domination_number(fixtures["K2"]) == 2
    assert paired_domination_number(fixtures["C5"]) == 4
    assert paired_domination_number(fixtures["STAR3"]) == 2
    assert paired_domination_number(fixtures["P6"]) == 4


def test_paired_domination_is_even_and_matches_oracle():
    rng = random.Random(9)
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 8))
        value = paired_domination_number(g)
        assert value % 2 == 0
        assert value == brute_force_paired_domination(g)


def test_induced_matching_fixtures(fixtures):
    assert induced_matching_number(fixtures["K2"]) == 1
    assert induced_matching_number(fixtures["P6"]) == 2
    assert induced_matching_number(fixtures["C4"]) == 1
    assert induced_matching_number(fixtures["C5"]) == 1


def test_induced_matching_below_matching_number():
    rng = random.Random(13)
    for _ in range(60):
        g = random_connected_graph(rng, rng.randint(2, 9))
        assert induced_matching_number(g) <= matching_number(g)


def test_budget_rejects_large_instances():
    big = path_graph(30)
    tight = SearchBudget.scaled(8)
    with pytest.raises(SearchBudgetExceeded):
        paired_domination_number(big, tight)
    with pytest.raises(SearchBudgetExceeded):
        enumerate_perfect_matchings(big, tight)
    with pytest.raises(SearchBudgetExceeded):
        induced_matching_number(big, tight)


# --- hypothesis properties -------------------------------------------------------


@st.composite
def connected_graphs(draw) -> Graph:
    seed = draw(st.integers(min_value=0, max_value=10_000))
    n = draw(st.integers(min_value=2, max_value=8))
    return random_connected_graph(random.Random(seed), n)


@given(connected_graphs())
@settings(max_examples=40, deadline=None)
def test_all_matchings_are_disjoint(g: Graph):
    for m in enumerate_matchings(g):
        seen = set()
        for u, v in m.edges:
            assert u not in seen and v not in seen
            seen.update((u, v))


@given(connected_graphs())
@settings(max_examples=40, deadline=None)
def test_matching_and_domination_ranges(g: Graph):
    nu = matching_number(g)
    assert 1 <= nu <= g.vertex_count // 2
    assert 2 <= paired_domination_number(g) <= g.vertex_count
