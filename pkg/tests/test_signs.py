from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import digraphs
from multipath.errors import MissingCover
from multipath.families import linear, polygon
from multipath.poset import enumerate_path_poset
from multipath.signs import SignAssignment, canonical_sign, verify_sign


def _sign_of(p, s, lo_mask, e):
    k = next(k for k, (lo, _, f) in enumerate(p.covers) if p.masks[lo] == lo_mask and f == e)
    return s.signs[k]


def test_empty_covers_have_sign_zero():
    p = enumerate_path_poset(polygon(3))
    s = canonical_sign(p)
    for e in range(4):
        assert _sign_of(p, s, 0, e) == 0


def test_i2_values():
    p = enumerate_path_poset(linear(2))
    s = canonical_sign(p)
    assert _sign_of(p, s, 0b01, 1) == 1
    assert _sign_of(p, s, 0b10, 0) == 0


def test_valid_on_named():
    for g in (linear(3), polygon(3)):
        p = enumerate_path_poset(g)
        assert verify_sign(p, canonical_sign(p)).ok


def test_all_zero_fails_once():
    p = enumerate_path_poset(linear(2))
    rep = verify_sign(p, SignAssignment((0,) * len(p.covers)))
    assert len(rep.violations) == 1 and rep.squares_checked == 1


def test_wrong_length():
    p = enumerate_path_poset(linear(2))
    with pytest.raises(MissingCover):
        verify_sign(p, SignAssignment((0,)))


@given(digraphs(), st.integers(0, 2 ** 32))
def test_canonical_valid_under_reordering(g, seed):
    p = enumerate_path_poset(g)
    assert verify_sign(p, canonical_sign(p, g)).ok
    rng = random.Random(seed)
    for _ in range(5):
        order = list(range(g.edge_count))
        rng.shuffle(order)
        assert verify_sign(p, canonical_sign(p, order=order)).ok


def test_foreign_graph_rejected():
    p = enumerate_path_poset(linear(2))
    with pytest.raises(ValueError):
        canonical_sign(p, linear(3))
