from itertools import combinations

import pytest
from hypothesis import assume, given, strategies as st

from app.models.bipartition import Bipartition, Side
from app.models.labeledGraph import Residue
from app.models.vceReport import PartitionVerdict, Verdict
from app.services.graph_service import GraphService
from app.services.vce_service import VceService
from app.utils.errors import DomainError, InvalidPartitionError


def split(graph, r_labels):
    return Bipartition.from_members(graph.order, [graph.index_of(Residue(k)) for k in r_labels])


@st.composite
def graphs_with_partitions(draw, max_vertices=10):
    order = draw(st.integers(min_value=2, max_value=max_vertices))
    pairs = list(combinations(range(order), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    in_b = draw(st.lists(st.booleans(), min_size=order, max_size=order))
    assume(any(in_b) and not all(in_b))
    return GraphService.from_edges(list(range(1, order + 1)), edges), Bipartition.from_mask(in_b)


def test_tally_examples():
    gamma6 = GraphService.gamma(6)
    t = VceService.tally(gamma6, split(gamma6, [3]), gamma6.index_of(Residue(3)))
    assert (t.inside, t.outside, t.verdict) == (0, 2, Verdict.VERY_COST_EFFECTIVE)

    gamma16 = GraphService.gamma(16)
    t = VceService.tally(gamma16, split(gamma16, [4, 8, 12]), gamma16.index_of(Residue(8)))
    assert (t.inside, t.outside, t.verdict) == (2, 4, Verdict.VERY_COST_EFFECTIVE)


def test_isolated_vertex_is_only_cost_effective():
    omega12 = GraphService.non_nilradical_graph(12)
    v = omega12.index_of(Residue(2))
    t = VceService.tally(omega12, split(omega12, [2, 3]), v)
    assert (t.inside, t.outside, t.verdict) == (0, 0, Verdict.COST_EFFECTIVE_ONLY)


def test_tally_rejects_out_of_range_vertex():
    graph = GraphService.gamma(6)
    with pytest.raises(DomainError):
        VceService.tally(graph, Bipartition.balanced(3), 3)


def test_check_gamma_pq():
    graph = GraphService.gamma(15)
    report = VceService.check_bipartition(graph, split(graph, [3, 6, 9, 12]))
    assert report.partition_verdict is PartitionVerdict.VERY_COST_EFFECTIVE
    assert report.witnesses == ()
    assert len(report.tallies) == graph.order


def test_check_reports_every_failing_vertex():
    graph = GraphService.gamma(15)
    report = VceService.check_bipartition(graph, split(graph, [3, 5, 6, 9, 12]))
    assert report.partition_verdict is PartitionVerdict.NEITHER
    assert graph.index_of(Residue(5)) in report.witnesses
    five = report.tallies[graph.index_of(Residue(5))]
    assert (five.inside, five.outside) == (4, 0)


@pytest.mark.parametrize('m', range(2, 11))
def test_complete_graph_verdicts(m):
    graph = GraphService.complete_graph(m)
    verdicts = {
        VceService.check_bipartition(graph, Bipartition.from_members(m, r)).partition_verdict
        for size in range(1, m)
        for r in combinations(range(m), size)
    }
    if m % 2 == 0:
        assert PartitionVerdict.VERY_COST_EFFECTIVE in verdicts
        assert VceService.is_very_cost_effective(graph, Bipartition.balanced(m))
    else:
        assert PartitionVerdict.VERY_COST_EFFECTIVE not in verdicts


def test_k3_balanced_split_is_only_cost_effective():
    graph = GraphService.complete_graph(3)
    partition = Bipartition.from_members(3, [0])
    assert VceService.check_bipartition(graph, partition).partition_verdict is PartitionVerdict.COST_EFFECTIVE_ONLY
    assert VceService.is_cost_effective(graph, partition)
    assert not VceService.is_very_cost_effective(graph, partition)


@given(graphs_with_partitions())
def test_swap_symmetry(case):
    graph, partition = case
    report = VceService.check_bipartition(graph, partition)
    swapped = VceService.check_bipartition(graph, partition.swap())
    assert report == swapped


@given(graphs_with_partitions())
def test_boolean_checker_agrees_with_report(case):
    graph, partition = case
    report = VceService.check_bipartition(graph, partition)
    assert VceService.is_very_cost_effective(graph, partition) == report.is_very_cost_effective
    assert report.witnesses == tuple(t.vertex for t in report.tallies if t.inside >= t.outside)
    for t in report.tallies:
        assert t.degree == graph.degree(t.vertex)
        assert t == VceService.tally(graph, partition, t.vertex)


def test_partition_must_match_graph():
    with pytest.raises(InvalidPartitionError):
        VceService.check_bipartition(GraphService.gamma(6), Bipartition.balanced(4))


def test_bipartition_invariants():
    with pytest.raises(InvalidPartitionError):
        Bipartition(3, (Side.R, Side.R, Side.R))
    with pytest.raises(InvalidPartitionError):
        Bipartition(2, (Side.R, Side.B, Side.B))
    with pytest.raises(InvalidPartitionError):
        Bipartition.from_members(3, [5])

    partition = Bipartition.from_members(4, [0, 2])
    assert partition.r == (0, 2)
    assert partition.b == (1, 3)
    assert partition.swap().r == (1, 3)


def test_set_verdict():
    graph = GraphService.complete_graph(4)
    assert VceService.set_verdict(graph, [0, 1]) is PartitionVerdict.VERY_COST_EFFECTIVE
    assert VceService.set_verdict(graph, [0, 1, 2]) is PartitionVerdict.NEITHER
    with pytest.raises(DomainError):
        VceService.set_verdict(graph, [])
    with pytest.raises(DomainError):
        VceService.set_verdict(graph, [7])


def test_bipartite_partition():
    gamma15 = GraphService.gamma(15)
    colouring = VceService.bipartite_partition(gamma15)
    assert [gamma15.label_of(v).k for v in colouring.r] == [3, 6, 9, 12]
    assert VceService.is_very_cost_effective(gamma15, colouring)

    assert VceService.bipartite_partition(GraphService.gamma(16)) is None
    assert VceService.bipartite_partition(GraphService.from_edges([1, 2], [])) is None


@given(graphs_with_partitions())
def test_bipartition_verdict_is_the_pair_of_set_verdicts(case):
    graph, partition = case
    both_sides = (
        VceService.set_verdict(graph, partition.r) is PartitionVerdict.VERY_COST_EFFECTIVE
        and VceService.set_verdict(graph, partition.b) is PartitionVerdict.VERY_COST_EFFECTIVE
    )
    assert VceService.is_very_cost_effective(graph, partition) == both_sides


@given(graphs_with_partitions(max_vertices=14))
def test_inside_counts_sum_to_twice_the_edges_within_sides(case):
    graph, partition = case
    report = VceService.check_bipartition(graph, partition)
    in_b = partition.b_mask()
    within = sum(1 for i, j in graph.edges() if in_b[i] == in_b[j])
    assert sum(t.inside for t in report.tallies) == 2 * within
    assert sum(t.inside + t.outside for t in report.tallies) == 2 * graph.edge_count


def test_bipartite_partition_colours_long_paths_alternately():
    path = GraphService.from_edges(list(range(1, 301)), [(i, i + 1) for i in range(299)])
    colouring = VceService.bipartite_partition(path)
    assert colouring.r == tuple(range(0, 300, 2))
    assert colouring.b == tuple(range(1, 300, 2))

    gamma = GraphService.gamma(2 * 499)
    colouring = VceService.bipartite_partition(gamma)
    assert [gamma.label_of(v).k for v in colouring.r] == list(range(2, 998, 2))
