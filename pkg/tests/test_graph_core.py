from itertools import combinations

import networkx as nx
import pytest

from app.errors import GraphFormatError, GraphValueError, GuardExceededError, UnsupportedError
from app.functions.corpus import random_graphs
from app.functions.graph_core import (
    Graph, canonical_form, classify, enumerate_connected, from_edge_list, from_graph6, induced, is_chordal, mask_of,
    parse_edge_list_text, radius, to_edge_list_text, to_graph6,
)
from tests.graphs import complete, cycle, path, star


def test_graph6_known_strings():
    assert from_graph6("C~") == complete(4)
    assert from_graph6("A_") == complete(2)
    assert to_graph6(path(4)) == "Ch"
    assert from_graph6(">>graph6<<Ch") == path(4)


@pytest.mark.parametrize("line, offset", [
    ("C~~", 2),
    ("C!", 1),
    ("Cé", 1),
])
def test_graph6_errors_carry_offsets(line, offset):
    with pytest.raises(GraphFormatError) as err:
        from_graph6(line, line_number=7)
    assert err.value.offset == offset
    assert err.value.line == 7
    assert "line 7" in str(err.value)


def test_graph6_truncated_and_padding():
    with pytest.raises(GraphFormatError):
        from_graph6("C")
    with pytest.raises(GraphFormatError):
        from_graph6("A`")


def test_graph6_size_cap():
    with pytest.raises(GuardExceededError):
        from_graph6("~~" + "?" * 10)


def test_edge_list_text():
    g = parse_edge_list_text("4:0-1,1-2,2-3")
    assert g == path(4)
    assert to_edge_list_text(g) == "4:0-1,1-2,2-3"
    with pytest.raises(GraphFormatError):
        parse_edge_list_text("4:0-1,x")
    with pytest.raises(GraphFormatError):
        parse_edge_list_text("0-1")


def test_edge_list_values():
    with pytest.raises(GraphValueError):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(GraphValueError):
        from_edge_list(3, [(0, 5)])


def test_induced_keeps_original_labels():
    g = induced(cycle(5), 0b10110)
    assert g.n == 3
    assert g.labels == (1, 2, 4)
    assert g.edges() == [(0, 1)]
    with pytest.raises(GraphValueError):
        induced(path(3), 0b1000)


def test_classify_flags(P4, C4, bowtie):
    f = classify(P4)
    assert f.connected and f.forest and f.chordal and f.split and f.block_graph
    assert f.radius == 2 and f.radius_at_most_2
    assert "radius2" in f.labels()

    f = classify(C4)
    assert not f.chordal and not f.split and not f.block_graph and not f.forest

    f = classify(bowtie)
    assert f.chordal and f.block_graph and f.radius == 1


def test_split_partition_of_star():
    f = classify(star(3))
    assert f.split
    assert len(f.clique_part) == 2
    assert f.split_q == 4


def has_split_obstruction(g):
    """Induced 2K_2, C_4 or C_5, by scanning vertex subsets"""
    for k, edges in ((4, 2), (4, 4), (5, 5)):
        for combo in combinations(range(g.n), k):
            sub = induced(g, mask_of(combo))
            degrees = {sub.degree(v) for v in range(k)}
            if sub.edge_count == edges and degrees == {2 * edges // k}:
                return True
    return False


def split_corpus():
    yield from (g for n in range(1, 7) for g in enumerate_connected(n))
    yield from random_graphs(150, 4, 10, edge_percent=50, seed=31)


def test_split_iff_no_forbidden_induced_subgraph():
    for g in split_corpus():
        f = classify(g)
        assert f.split == (not has_split_obstruction(g)), to_graph6(g)
        if f.split:
            clique, independent = f.clique_part, f.independent_part
            assert sorted(clique + independent) == list(range(g.n))
            assert all(g.has_edge(u, v) for u, v in combinations(clique, 2))
            assert not any(g.has_edge(u, v) for u, v in combinations(independent, 2))


@pytest.mark.parametrize("g, split", [
    (from_edge_list(4, [(0, 1), (2, 3)]), False),
    (cycle(4), False),
    (cycle(5), False),
    (complete(5), True),
    (from_edge_list(3, []), True),
])
def test_split_small_cases(g, split):
    assert classify(g).split == split


def test_graph6_round_trip_on_random_graphs():
    for g in random_graphs(120, 1, 40, edge_percent=30, seed=5):
        assert from_graph6(to_graph6(g)) == g


def test_radius_of_disconnected_graph():
    assert radius(from_edge_list(4, [(0, 1), (2, 3)])) is None


def test_chordality_matches_networkx():
    for n in range(2, 6):
        for g in enumerate_connected(n):
            assert is_chordal(g) == nx.is_chordal(g.to_networkx())


def test_canonical_form_is_a_labeling_invariant():
    a = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    b = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(star(3))
    with pytest.raises(UnsupportedError):
        canonical_form(path(8))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_enumerate_connected_counts(n, count):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == count
    assert all(classify(g).connected for g in graphs)


def test_enumerate_connected_against_atlas():
    atlas = [Graph.from_networkx(G) for G in nx.graph_atlas_g() if G.number_of_nodes() == 5 and nx.is_connected(G)]
    ours = list(enumerate_connected(5))
    assert {canonical_form(g) for g in atlas} == {canonical_form(g) for g in ours}


@pytest.mark.slow
def test_enumerate_connected_seven():
    assert len(list(enumerate_connected(7))) == 853


def test_enumerate_connected_refuses_large_n():
    with pytest.raises(UnsupportedError, match="geng"):
        list(enumerate_connected(8))
