from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from app.models.bipartition import Bipartition
from app.models.labeledGraph import Residue
from app.models.searchOutcome import SearchStatus
from app.services.graph_service import GraphService
from app.services.search_service import SearchService
from app.services.vce_service import VceService
from app.utils.errors import DomainError


@st.composite
def small_graphs(draw, max_vertices=8):
    order = draw(st.integers(min_value=2, max_value=max_vertices))
    pairs = list(combinations(range(order), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return GraphService.from_edges(list(range(1, order + 1)), edges)


def exists_by_itertools(graph):
    """Enumeración independiente con itertools sobre todas las asignaciones."""
    for sides in product((False, True), repeat=graph.order):
        if any(sides) and not all(sides):
            if VceService.is_very_cost_effective(graph, Bipartition.from_mask(sides)):
                return True
    return False


def test_even_complete_graph_is_found():
    graph = GraphService.complete_graph(4)
    outcome = SearchService.brute_force(graph)
    assert outcome.status is SearchStatus.FOUND
    assert len(outcome.partition.r) == len(outcome.partition.b) == 2
    assert VceService.is_very_cost_effective(graph, outcome.partition)


def test_odd_complete_graph_has_none():
    outcome = SearchService.brute_force(GraphService.complete_graph(5))
    assert outcome.status is SearchStatus.NONE_EXISTS
    assert outcome.partitions_examined == 15


def test_total_graph_of_gamma_6_has_none():
    graph = GraphService.total_graph(GraphService.gamma(6))
    assert graph.order == 5
    assert SearchService.brute_force(graph).status is SearchStatus.NONE_EXISTS


def test_brute_force_respects_cap_and_trivial_graphs():
    graph = GraphService.gamma(30)
    outcome = SearchService.brute_force(graph, vertex_cap=10)
    assert outcome.status is SearchStatus.INCONCLUSIVE
    assert '10' in outcome.reason

    single = GraphService.nilradical_graph(12)
    assert SearchService.brute_force(single).status is SearchStatus.NONE_EXISTS


def test_brute_force_without_symmetry_reduction_examines_both_orientations():
    outcome = SearchService.brute_force(GraphService.complete_graph(5), reduce_symmetry=False)
    assert outcome.status is SearchStatus.NONE_EXISTS
    assert outcome.partitions_examined == 2 ** 5 - 2


def test_non_strict_search_accepts_cost_effective_splits():
    graph = GraphService.complete_graph(3)
    assert SearchService.brute_force(graph).status is SearchStatus.NONE_EXISTS
    outcome = SearchService.brute_force(graph, strict=False)
    assert outcome.status is SearchStatus.FOUND
    assert VceService.is_cost_effective(graph, outcome.partition)


@settings(max_examples=40)
@given(small_graphs(max_vertices=12))
def test_symmetry_reduction_does_not_change_the_answer(graph):
    reduced = SearchService.brute_force(graph)
    full = SearchService.brute_force(graph, reduce_symmetry=False)
    assert reduced.status is full.status
    assert reduced.status is not SearchStatus.INCONCLUSIVE
    assert reduced.found == exists_by_itertools(graph)
    for outcome in (reduced, full):
        if outcome.found:
            assert VceService.is_very_cost_effective(graph, outcome.partition)


@given(small_graphs(max_vertices=12), st.integers(min_value=0, max_value=2 ** 16))
def test_local_search_is_sound(graph, seed):
    outcome = SearchService.local_search(graph, max_restarts=3, max_steps=50, rng_seed=seed)
    assert outcome.status is not SearchStatus.NONE_EXISTS
    if outcome.found:
        assert VceService.is_very_cost_effective(graph, outcome.partition)
        assert SearchService.brute_force(graph).found


def test_isolated_obstruction():
    omega12 = GraphService.non_nilradical_graph(12)
    assert omega12.label_of(SearchService.isolated_obstruction(omega12)) == Residue(2)
    omega18 = GraphService.non_nilradical_graph(18)
    assert omega18.label_of(SearchService.isolated_obstruction(omega18)) == Residue(3)
    assert SearchService.isolated_obstruction(GraphService.gamma(16)) is None


@pytest.mark.parametrize('seed', range(5))
def test_local_search_finds_gamma_15(seed):
    graph = GraphService.gamma(15)
    outcome = SearchService.local_search(graph, rng_seed=seed)
    assert outcome.status is SearchStatus.FOUND
    assert VceService.is_very_cost_effective(graph, outcome.partition)


def test_local_search_on_examples():
    assert SearchService.local_search(GraphService.complete_graph(5)).status is SearchStatus.INCONCLUSIVE
    assert SearchService.local_search(GraphService.complete_graph(10), max_restarts=1).found


def test_local_search_is_deterministic_for_a_seed():
    graph = GraphService.line_graph(GraphService.gamma(27))
    first = SearchService.local_search(graph, rng_seed=7)
    second = SearchService.local_search(graph, rng_seed=7)
    assert first.status is second.status
    assert first.partition == second.partition
    assert first.partitions_examined == second.partitions_examined


def test_local_search_needs_two_vertices():
    with pytest.raises(DomainError):
        SearchService.local_search(GraphService.nilradical_graph(12))


def test_connected_gamma_is_cost_effective():
    for n in range(4, 60):
        graph = GraphService.gamma(n)
        if 2 <= graph.order <= 20:
            outcome = SearchService.brute_force(graph, strict=False)
            assert outcome.found, n
            assert VceService.is_cost_effective(graph, outcome.partition)


@given(small_graphs(max_vertices=12))
def test_isolated_vertex_means_no_bipartition(graph):
    if SearchService.isolated_obstruction(graph) is not None:
        assert SearchService.brute_force(graph).status is SearchStatus.NONE_EXISTS
