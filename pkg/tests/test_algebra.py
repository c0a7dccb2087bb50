from __future__ import annotations

import json

import pytest
from hypothesis import given

from conftest import digraphs
from multipath.algebra import (
    algebra_betti,
    algebra_dims,
    build_algebra_complex,
    diagonal,
    dual_numbers,
    ground_field,
    make_algebra,
    matrix_algebra,
    parse_algebra,
    qdim,
)
from multipath.cohomology import BettiTable, multipath_betti, verify_d_squared
from multipath.errors import InvalidAlgebra, UngradedAlgebra
from multipath.euler import chi_alpha
from multipath.families import alternating, dandelion, linear
from multipath.polynomial import LaurentPolynomial


def test_i1_multiplication_map():
    a = dual_numbers()
    c = build_algebra_complex(linear(1), a)
    assert c.dims == (4, 2)
    # (1,x) basis: 1*1=1, 1*x=x, x*1=x, x*x=0
    assert c.differentials[0].to_dense() in ([[1, 0, 0, 0], [0, 1, 1, 0]],
                                             [[-1, 0, 0, 0], [0, -1, -1, 0]])


def test_rank_one_collapses_to_field():
    for g in (linear(2), alternating(4), dandelion(2, 2)):
        assert algebra_betti(g, ground_field()) == multipath_betti(g)


def test_d_squared_dual_numbers():
    assert verify_d_squared(build_algebra_complex(dandelion(2, 1), dual_numbers()))


@given(digraphs(max_vertices=4, max_edges=4))
def test_d_squared_noncommutative(g):
    assert verify_d_squared(build_algebra_complex(g, matrix_algebra(2)))


@given(digraphs(max_vertices=5, max_edges=5))
def test_euler_matches_chain_level_chi(g):
    for a in (dual_numbers(), diagonal(2)):
        assert algebra_betti(g, a).euler == chi_alpha(g).evaluate(a.rank)


@pytest.mark.parametrize("n", range(0, 6))
def test_linear_graphs(n):
    assert algebra_betti(linear(n), dual_numbers()) == BettiTable({0: 2})


def test_single_vertex_and_diagonal():
    for r in (1, 2, 3):
        assert algebra_betti(linear(0), diagonal(r)) == BettiTable({0: r})
    assert algebra_betti(linear(2), diagonal(2)) == BettiTable({0: 2})


def test_dims_formula():
    assert algebra_dims(linear(2), 2) == [8, 8, 2]


def test_qdim():
    q = LaurentPolynomial.variable()
    assert qdim(dual_numbers()) == 1 + q
    assert qdim(dual_numbers(2)) == 1 + q * q
    ungraded = make_algebra([[[1]]], [1])
    with pytest.raises(UngradedAlgebra):
        qdim(ungraded)


def test_invalid_algebras():
    with pytest.raises(InvalidAlgebra):
        make_algebra([[[1, 0], [0, 1]], [[0, 1], [1, 0]]], [0, 1], [0, 1])  # wrong unit
    with pytest.raises(InvalidAlgebra):
        make_algebra([[[1, 0], [0, 1]], [[0, 1], [1, 0]]], [1, 0], [0, 1])  # x*x=1 not homogeneous


def test_parse_algebra(tmp_path):
    assert parse_algebra("dual-numbers").rank == 2
    assert parse_algebra("diagonal:3").rank == 3
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"rank": 1, "table": [1], "unit": [1], "degrees": [0]}))
    assert parse_algebra(str(path)).rank == 1
    with pytest.raises(InvalidAlgebra):
        parse_algebra("no-such-algebra")
