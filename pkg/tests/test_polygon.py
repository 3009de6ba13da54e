from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higher_nakayama import polygon as pg
from higher_nakayama.polygon import PolygonCtx


def test_fuss_catalan_values():
    assert [pg.fuss_catalan(2, l) for l in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert pg.fuss_catalan(3, 3) == 12


def test_counts_match_frozen_recurrence(frozen):
    for key, want in frozen["angulation_counts"].items():
        d, l = map(int, key.split(","))
        if (d - 1) * l + 2 <= 11:
            assert len(pg.enumerate_angulations(PolygonCtx(d, l))) == want, key


def test_hexagon_triangulations():
    angs = pg.enumerate_angulations(PolygonCtx(2, 4))
    assert len(angs) == 14
    assert all(len(A) == 3 for A in angs)


def test_diagonal_rules():
    ctx = PolygonCtx(3, 3)  # octagon cut into quadrilaterals
    assert pg.is_diagonal(ctx, 0, 3)
    assert not pg.is_diagonal(ctx, 0, 2)
    assert not pg.is_diagonal(ctx, 0, 7)
    assert not pg.is_diagonal(ctx, 0, 1)
    with pytest.raises(ValueError):
        pg.is_diagonal(ctx, 2, 2)
    with pytest.raises(ValueError):
        pg.is_diagonal(ctx, 0, 8)


def test_crossing():
    assert pg.crosses((0, 2), (1, 3))
    assert not pg.crosses((0, 2), (2, 4))
    assert not pg.crosses((0, 4), (1, 3))


def test_square_half_turn_witness():
    ok, witness = pg.invariant_angulation_exists(PolygonCtx(2, 2), 2)
    assert ok and len(witness) == 1
    assert not pg.invariant_angulation_exists(PolygonCtx(2, 2), 1)[0]


def test_hexagon_central_triangle():
    ctx = PolygonCtx(2, 4)
    T = ((0, 2), (0, 4), (2, 4))
    assert pg.is_fixed(ctx, T, 2)
    assert not pg.is_fixed(ctx, T, 1)
    orbit = {T}
    A = T
    for _ in range(6):
        A = pg.tau_on_angulation(ctx, A)
        orbit.add(A)
    assert len(orbit) == 2
    ok, witness = pg.invariant_angulation_exists(ctx, 2)
    assert ok and pg.is_fixed(ctx, witness, 2)


def test_pieces_of_an_angulation():
    ctx = PolygonCtx(2, 4)
    pieces = pg.polygon_pieces(ctx, ((0, 2), (0, 4), (2, 4)))
    assert sorted(map(sorted, pieces)) == [[0, 1, 2], [0, 2, 4], [0, 4, 5], [2, 3, 4]]


def test_lemma_routes_need_d_two():
    with pytest.raises(ValueError):
        pg.centrangulation_exists(PolygonCtx(1, 3), 1)
    with pytest.raises(ValueError):
        pg.centrangulation_exists(PolygonCtx(2, 4), 4)


def test_degenerate_d_one():
    ctx = PolygonCtx(1, 5)
    assert ctx.N == 2
    assert pg.enumerate_angulations(ctx) == [()]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, l) for l in range(1, 9)] + [(3, l) for l in range(1, 5)]
                       + [(4, l) for l in range(1, 4)] + [(5, 2), (6, 2)]),
       st.integers(0, 30))
def test_rotation_permutes_angulations(dl, k):
    ctx = PolygonCtx(*dl)
    angs = set(pg.enumerate_angulations(ctx))
    for A in angs:
        B = pg.rotate(ctx, A, k)
        assert B in angs
        assert pg.rotate(ctx, B, -k) == A
        assert pg.rotate(ctx, A, ctx.N) == A


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 12), st.integers(1, 12), st.integers(1, 60))
def test_lcm_lemma(d, l, n):
    assert pg.lcm_lemma_holds(d, l, n)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 10), st.integers(1, 10), st.integers(1, 40))
def test_criterion_is_periodic_in_n(d, l, n):
    N = (d - 1) * l + 2
    assert pg.criterion_invariant_exists(d, l, n) == pg.criterion_invariant_exists(d, l, n + N)
    # n a multiple of N/2 rotates by a multiple of N(d-1)/2, always possible
    if N % 2 == 0:
        assert pg.criterion_invariant_exists(d, l, N // 2)
