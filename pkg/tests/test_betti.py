import pytest

from app.errors import GuardExceededError, StructureError
from app.functions.betti import (
    RATIONALS, CoefficientField, chordal_reg_cover, clear_homology_cache, euler_characteristic, hochster_table,
    homology_cache_size, i_number, independence_complex, projective_dimension, reduced_homology_ranks, reg_cover,
)
from app.functions.graph_core import Graph, enumerate_connected, from_edge_list, is_chordal
from app.functions.indpoly import bundle
from tests.graphs import cycle, path, star


def test_P4_betti_table(P4):
    table = hochster_table(P4, RATIONALS)
    assert table.get(0, 0) == 1
    assert table.get(1, 2) == 3
    assert table.get(2, 3) == 2
    assert table.get(2, 4) == 0
    assert (table.pdim, table.reg) == (2, 1)
    assert table.totals() == [1, 3, 2]


def test_C4_betti_table(C4):
    table = hochster_table(C4, RATIONALS)
    assert table.totals() == [1, 4, 4, 1]
    assert table.get(3, 4) == 1
    assert table.pdim == 3


def test_render_uses_dots_for_zeros(P4):
    text = hochster_table(P4, RATIONALS).render()
    assert text.splitlines()[1].startswith("total:")
    assert "." in text


@pytest.mark.parametrize("g, pdim", [
    (star(4), 4),
    (path(4), 2),
    (cycle(5), 3),
    (cycle(6), 4),
])
def test_projective_dimension(g, pdim):
    assert projective_dimension(g, RATIONALS) == pdim


def test_reg_cover_of_big_star():
    assert reg_cover(star(4), RATIONALS) == 3
    with pytest.raises(StructureError):
        reg_cover(from_edge_list(3, []))


def test_prime_field_agrees_on_small_graphs(C5):
    over_q = hochster_table(C5, RATIONALS)
    over_2 = hochster_table(C5, CoefficientField.parse("p:2"))
    assert over_q.entries == over_2.entries
    assert over_2.field == "p:2"


def test_field_parsing():
    assert CoefficientField.parse("q") == RATIONALS
    assert str(CoefficientField.parse("p:3")) == "p:3"
    for bad in ("p:4", "p:x", "r"):
        with pytest.raises(ValueError):
            CoefficientField.parse(bad)


def test_homology_of_C4_complex(C4):
    # two disjoint edges
    ranks = reduced_homology_ranks(independence_complex(C4))
    assert ranks == {-1: 0, 0: 1, 1: 0}


def test_euler_characteristic_matches_gG():
    for n in range(1, 6):
        for g in enumerate_connected(n):
            assert euler_characteristic(independence_complex(g)) == bundle(g).gG


@pytest.mark.parametrize("g, i", [
    (path(4), 2),
    (cycle(5), 2),
    (cycle(6), 2),
    (star(5), 1),
    (from_edge_list(3, []), 3),
    (Graph(0, ()), 0),
])
def test_i_number(g, i):
    assert i_number(g) == i


def test_chordal_formula(P4, bowtie):
    assert chordal_reg_cover(P4, cross_check=True) == 1
    assert chordal_reg_cover(bowtie, cross_check=True) == 3


def test_chordal_formula_rejects(C4):
    with pytest.raises(StructureError):
        chordal_reg_cover(C4)
    with pytest.raises(StructureError):
        chordal_reg_cover(from_edge_list(4, [(0, 1), (2, 3)]))


def test_chordal_formula_over_census():
    for n in range(2, 7):
        for g in enumerate_connected(n):
            if is_chordal(g):
                assert projective_dimension(g, RATIONALS) == n - i_number(g)


def test_hochster_guard():
    with pytest.raises(GuardExceededError):
        hochster_table(path(13))


def test_homology_cache_starts_empty_and_clears(C5):
    assert homology_cache_size() == 0
    first = hochster_table(C5, RATIONALS)
    assert homology_cache_size() > 0
    clear_homology_cache()
    assert homology_cache_size() == 0
    assert hochster_table(C5, RATIONALS) == first
