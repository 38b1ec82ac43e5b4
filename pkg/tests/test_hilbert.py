import pytest

from app.errors import StructureError
from app.functions.graph_core import enumerate_connected, from_edge_list
from app.functions.hilbert import (
    Hypergraph, degree_report, h_cover, h_cover_oracle, h_dual_hypergraph, h_dual_oracle, h_edge, h_edge_Ds,
    h_edge_fvector, h_edge_hypergraph, h_edge_hypergraph_oracle, hf_cover, hf_cover_oracle, hf_cover_series,
)
from app.functions.indpoly import bundle
from app.functions.polyring import IntPoly, series_h_extract


def test_P4_profiles(P4):
    b = bundle(P4)
    edge = h_edge(b)
    assert edge.h == [1, 2]
    assert (edge.dim, edge.deg_h) == (2, 1)

    cover = h_cover(b)
    assert cover.h == [1, 2]
    assert (cover.dim, cover.deg_h, cover.a_invariant) == (2, 1, -1)


def test_claw_cover_profile(claw):
    cover = h_cover(bundle(claw))
    assert cover.h == [1, 1, 1]
    assert cover.deg_h == 2


def test_K2_cover_ring_is_the_residue_field(K2):
    b = bundle(K2)
    assert h_cover(b).h == [1]
    assert [hf_cover(2, b.gvec, d) for d in range(1, 5)] == [0, 0, 0, 0]


def test_hf_cover_of_P4(P4):
    b = bundle(P4)
    assert hf_cover(4, b.gvec, 1) == 4
    assert hf_cover(4, b.gvec, 2) == 7
    with pytest.raises(ValueError):
        hf_cover(4, b.gvec, 0)


def test_h_cover_needs_an_edge():
    with pytest.raises(StructureError):
        h_cover(bundle(from_edge_list(3, [])))


def test_closed_forms_match_oracles():
    for n in range(2, 6):
        for g in enumerate_connected(n):
            b = bundle(g)
            assert h_edge_fvector(b) == h_edge_Ds(b)
            assert IntPoly(tuple(h_cover(b).h)) == h_cover_oracle(g)
            for d in range(1, 2 * n):
                assert hf_cover(n, b.gvec, d) == hf_cover_oracle(g, d)


def test_series_extraction_recovers_h_cover(P4):
    assert series_h_extract(hf_cover_series(P4, 10), 2).to_list() == [1, 2]


def test_degree_cases(P4, K4):
    assert degree_report(bundle(P4)).case == "floor"
    report = degree_report(bundle(K4))
    assert report.case == "max"
    assert report.deg_h_cover == 2


def test_degree_report_agrees_everywhere():
    # degree_report raises InvariantViolation on any disagreement
    for n in range(2, 7):
        for g in enumerate_connected(n):
            report = degree_report(bundle(g))
            assert report.deg_h_cover == n - 2 - bundle(g).M


def test_hypergraph_drops_non_minimal_edges():
    h = Hypergraph.of(3, [[0, 1], [2], [0, 1, 2]])
    assert len(h.edges) == 2
    assert h.delta == 1
    with pytest.raises(ValueError):
        Hypergraph.of(2, [[0, 3]])


def test_dual_of_mixed_hypergraph():
    h = Hypergraph.of(3, [[0, 1], [2]])
    prof = h_dual_hypergraph(h)
    assert prof.h == [1, 1, -1]
    assert prof.dim == 2
    assert h_dual_oracle(h).to_list() == [1, 1, -1]


@pytest.mark.parametrize("n, edges", [
    (4, [[0, 1], [1, 2, 3]]),
    (5, [[0, 1, 2], [2, 3, 4], [0, 4]]),
    (4, [[0, 1], [1, 2], [2, 3]]),
])
def test_hypergraph_forms_match_oracles(n, edges):
    h = Hypergraph.of(n, edges)
    assert IntPoly(tuple(h_dual_hypergraph(h).h)) == h_dual_oracle(h)
    assert IntPoly(tuple(h_edge_hypergraph(h).h)) == h_edge_hypergraph_oracle(h)


def test_graph_hypergraph_dual_is_the_cover_ring(C5):
    h = Hypergraph.from_graph(C5)
    assert h_dual_hypergraph(h).h == h_cover(bundle(C5)).h
