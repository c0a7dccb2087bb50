from __future__ import annotations

import warnings

import pytest
from hypothesis import given

from conftest import digraphs
from oracles import brute_betti
from multipath.cohomology import (
    BettiTable,
    CochainComplex,
    betti_numbers,
    build_field_complex,
    euler_characteristic,
    field_cross_check,
    multipath_betti,
    verify_d_squared,
)
from multipath.errors import NotAComplex, TorsionWarning
from multipath.families import (
    alternating,
    dandelion,
    h_shaped,
    linear,
    polygon,
    source_star,
    square_with_diagonal,
)
from multipath.linalg import QQ, FieldSpec, Matrix


def test_i1_complex():
    c = build_field_complex(linear(1))
    assert c.dims == (1, 1)
    assert c.differentials[0].to_dense() in ([[1]], [[-1]])


def test_p2_complex():
    c = build_field_complex(polygon(2))
    assert c.dims == (1, 3, 3)
    assert verify_d_squared(c)


def test_source_star_injective():
    c = build_field_complex(source_star(3))
    assert c.dims == (1, 3)
    # d^0 injective: nothing survives in degree 0
    assert betti_numbers(c) == BettiTable({1: 2})


@pytest.mark.parametrize("g,want", [
    *[(linear(n), {}) for n in range(1, 6)],
    (polygon(3), {3: 1}),
    (dandelion(2, 2), {2: 1}),
    (h_shaped(), {2: 2}),
    (square_with_diagonal(), {2: 1, 3: 1}),
])
def test_named_betti(g, want):
    assert multipath_betti(g).support == want


def test_d_squared_examples():
    assert verify_d_squared(build_field_complex(square_with_diagonal()))
    assert verify_d_squared(build_field_complex(alternating(7)))


def test_flipped_sign_breaks_complex():
    c = build_field_complex(linear(2))
    d0, d1 = c.differentials
    dense = d1.to_dense()
    dense[0][0] = -dense[0][0]
    broken = CochainComplex(c.dims, (d0, Matrix.from_dense(dense, ncols=d1.shape[1])), QQ)
    assert not verify_d_squared(broken)
    with pytest.raises(NotAComplex):
        betti_numbers(broken)


def test_shape_checked():
    with pytest.raises(ValueError):
        CochainComplex((1, 2), (Matrix.from_dense([[1]]),))


def test_euler_examples():
    assert euler_characteristic(build_field_complex(linear(2))) == 0
    assert euler_characteristic(build_field_complex(polygon(2))) == 1
    assert euler_characteristic(build_field_complex(alternating(2))) == -1


@given(digraphs(max_edges=5))
def test_betti_matches_sympy_oracle(g):
    assert multipath_betti(g).support == brute_betti(g)


@given(digraphs())
def test_euler_equals_alternating_betti(g):
    c = build_field_complex(g)
    assert euler_characteristic(c) == betti_numbers(c).euler


@given(digraphs(max_edges=5))
def test_prime_fields_agree_on_small_graphs(g):
    with warnings.catch_warnings():
        warnings.simplefilter("error", TorsionWarning)
        tables = field_cross_check(g)
    assert len(set(tables.values())) == 1


def test_prime_field_betti():
    assert multipath_betti(polygon(3), FieldSpec.prime(2)) == BettiTable({3: 1})


def test_betti_table_ops():
    t = BettiTable({1: 2, 2: 0})
    assert t.support == {1: 2} and t[5] == 0
    assert t.shift(2) == BettiTable({3: 2})
    assert t.convolve(BettiTable({0: 1, 2: 1})) == BettiTable({1: 2, 3: 2})
    assert t.to_csv() == "degree,dimension\n1,2\n2,0\n"
    assert "euler characteristic: -2" in t.to_text()
    with pytest.raises(ValueError):
        BettiTable({0: -1})
