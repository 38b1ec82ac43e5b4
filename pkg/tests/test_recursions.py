import pytest

from app.errors import StructureError
from app.functions.betti import RATIONALS, projective_dimension
from app.functions.corpus import free_trees, random_forests
from app.functions.graph_core import from_edge_list
from app.functions.indpoly import bundle
from app.functions.recursions import block_check, jk_alpha_M, jk_pdim, leaf_clique_decompose
from tests.graphs import path, star


@pytest.mark.parametrize("g, pdim", [
    (path(4), 2),
    (star(5), 5),
    (from_edge_list(6, [(0, 1), (1, 2), (2, 3), (4, 5)]), 3),
    (from_edge_list(5, [(0, 1), (1, 2), (2, 3)]), 2),
])
def test_jk_pdim(g, pdim):
    assert jk_pdim(g) == pdim


def test_jk_needs_a_forest(C4):
    with pytest.raises(StructureError):
        jk_pdim(C4)
    with pytest.raises(StructureError):
        jk_alpha_M(C4)


@pytest.mark.parametrize("g, expected", [
    (path(2), (1, 0, -1)),
    (path(4), (2, 1, -2)),
    (path(5), (3, 0, 1)),
    (from_edge_list(1, []), (1, 1, 1)),
])
def test_jk_alpha_M(g, expected):
    r = jk_alpha_M(g)
    assert (r.alpha, r.M, r.c) == expected


def test_traces_are_recorded(P5):
    trace = []
    jk_pdim(P5, trace=trace)
    assert trace
    assert jk_alpha_M(P5).trace


@pytest.mark.parametrize("n", range(2, 8))
def test_forest_recursions_match_direct_computation(n):
    for t in free_trees(n):
        b = bundle(t)
        r = jk_alpha_M(t)
        assert (r.alpha, r.M, r.c) == (b.alpha, b.M, b.c)
        assert jk_pdim(t) == projective_dimension(t, RATIONALS)


def test_random_forests_match():
    for f in random_forests(25, 2, 11, seed=3):
        b = bundle(f)
        r = jk_alpha_M(f)
        assert (r.alpha, r.M, r.c) == (b.alpha, b.M, b.c)
        assert jk_pdim(f) == projective_dimension(f, RATIONALS)


def test_leaf_clique_decomposition(bowtie):
    split = leaf_clique_decompose(bowtie)
    assert split.K == [0, 1, 2]
    assert (split.s, split.r) == (0, 2)
    assert split.C == [1, 2]
    assert split.H == [3, 4]
    assert split.L == []


def test_leaf_clique_rejects(K4, C4):
    with pytest.raises(StructureError):
        leaf_clique_decompose(K4)
    with pytest.raises(StructureError):
        leaf_clique_decompose(C4)
    with pytest.raises(StructureError):
        block_check(C4)


def test_block_check(bowtie, P4, K4):
    report = block_check(bowtie)
    assert (report.M, report.i) == (1, 1)
    assert report.satisfied and report.identity_ok and report.i_recursion_ok
    assert report.reg_minus_deg == 1
    assert report.trace

    report = block_check(P4)
    assert (report.M, report.i, report.reg_minus_deg) == (1, 2, 0)

    report = block_check(K4)
    assert (report.M, report.i) == (0, 1)


def test_block_check_on_trees():
    for t in free_trees(7):
        report = block_check(t)
        assert report.identity_ok and report.i_recursion_ok and report.satisfied
