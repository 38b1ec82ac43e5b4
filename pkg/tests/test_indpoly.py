import pytest

from app.functions.corpus import random_graphs
from app.functions.graph_core import Graph, enumerate_connected, from_edge_list
from app.functions.indpoly import (
    D_coeff, D_coeff_by_derivative, E_coeff, M_via_Ds, bundle, gvector_bruteforce, independence_polynomial,
)
from tests.graphs import path


@pytest.mark.parametrize("name, gvec, alpha, M, c", [
    ("P4", [1, 4, 3], 2, 1, -2),
    ("P5", [1, 5, 6, 1], 3, 0, 1),
    ("K4", [1, 4], 1, 0, -3),
    ("C4", [1, 4, 2], 2, 0, -1),
    ("C5", [1, 5, 5], 2, 0, 1),
    ("claw", [1, 4, 3, 1], 3, 0, -1),
    ("bowtie", [1, 5, 4], 2, 1, -3),
])
def test_bundle_of_named_graphs(request, name, gvec, alpha, M, c):
    b = bundle(request.getfixturevalue(name))
    assert b.gvec == gvec
    assert (b.alpha, b.M, b.c) == (alpha, M, c)
    assert b.gG == 1 - sum(g * (-1) ** k for k, g in enumerate(gvec))
    assert b.euler == b.gG


def test_edgeless_and_empty_graphs():
    b = bundle(from_edge_list(3, []))
    assert b.gvec == [1, 3, 3, 1]
    assert (b.alpha, b.M, b.c) == (3, 3, 1)
    assert not b.has_edge

    b = bundle(Graph(0, ()))
    assert b.gvec == [1]
    assert (b.alpha, b.M) == (0, 0)


def test_recursion_matches_subset_scan():
    for n in range(1, 6):
        for g in enumerate_connected(n):
            assert independence_polynomial(g).to_list() == gvector_bruteforce(g)


def test_D_coefficients_of_P4(P4):
    b = bundle(P4)
    assert D_coeff(b, 0) == -2
    assert D_coeff(b, 1) == 3
    with pytest.raises(ValueError):
        D_coeff(b, 2)


def test_D_coefficients_agree_with_derivatives():
    for n in range(2, 6):
        for g in enumerate_connected(n):
            b = bundle(g)
            for s in range(b.alpha):
                assert D_coeff(b, s) == D_coeff_by_derivative(b, s)


def test_M_from_Ds_matches_root_order():
    for n in range(2, 7):
        for g in enumerate_connected(n):
            b = bundle(g)
            assert M_via_Ds(b) == b.M


def test_E_coefficient_of_P4(P4):
    b = bundle(P4)
    assert E_coeff(b, -1) == 0
    with pytest.raises(ValueError):
        E_coeff(b, 0)


def test_path_counts_are_fibonacci():
    b = bundle(path(14))
    assert b.alpha == 7
    assert sum(b.gvec) == 987


def isolated_corpus():
    yield from (g for n in range(1, 7) for g in enumerate_connected(n))
    yield from random_graphs(60, 2, 12, seed=13)


def test_isolated_vertex_raises_alpha_and_M_by_one():
    for g in isolated_corpus():
        b = bundle(g)
        plus = bundle(from_edge_list(g.n + 1, g.edges()))
        assert (plus.alpha, plus.M) == (b.alpha + 1, b.M + 1)
        assert plus.c == b.c
