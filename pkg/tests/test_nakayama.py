import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higher_nakayama import bqa
from higher_nakayama.nakayama import (NakAlgebra, NakModule, engine_algebra, ext_dim_nak,
                                      identify, indecomposables, is_projective, nu, omega,
                                      omega_power, tau, to_representation)


@st.composite
def algebra_and_module(draw, n_max=6, loewy_max=6):
    A = NakAlgebra(draw(st.integers(1, n_max)), draw(st.integers(2, loewy_max)))
    M = NakModule(draw(st.integers(0, A.n - 1)), draw(st.integers(1, A.loewy)))
    return A, M


def test_indecomposable_count():
    assert len(indecomposables(NakAlgebra(3, 4))) == 12


def test_shift_formulas():
    A = NakAlgebra(3, 3)
    assert omega(A, NakModule(0, 1)) == NakModule(1, 2)
    assert omega(A, NakModule(0, 3)) is None
    assert nu(A, NakModule(0, 1)) == NakModule(1, 1)
    assert tau(A, NakModule(0, 2)) == NakModule(1, 2)
    assert tau(A, NakModule(2, 3)) is None


def test_projectives():
    A = NakAlgebra(2, 3)
    assert [M for M in indecomposables(A) if is_projective(A, M)] == [NakModule(0, 3), NakModule(1, 3)]


def test_out_of_range():
    with pytest.raises(ValueError):
        omega(NakAlgebra(2, 2), NakModule(0, 3))
    with pytest.raises(ValueError):
        NakAlgebra(0, 2)


def test_json():
    A = NakAlgebra.from_json('{"type": "nakayama", "n": 4, "loewy": 3}')
    assert A == NakAlgebra(4, 3)
    assert NakModule.from_json(NakModule(2, 1).to_json()) == NakModule(2, 1)
    with pytest.raises(ValueError):
        NakAlgebra.from_json({"type": "bound_quiver"})


def test_ext_examples():
    A = NakAlgebra(2, 2)
    assert ext_dim_nak(A, NakModule(0, 1), NakModule(1, 1), 1) == 1
    assert ext_dim_nak(A, NakModule(0, 2), NakModule(1, 1), 1) == 0
    # the simple over Lambda(1, 2) extends itself in every degree
    B = NakAlgebra(1, 2)
    assert all(ext_dim_nak(B, NakModule(0, 1), NakModule(0, 1), i) == 1 for i in range(1, 5))


def test_ext_matches_frozen_engine_tables(frozen):
    for key, rows in frozen["ext_nonzero"].items():
        n, loewy = map(int, key.split(","))
        A = NakAlgebra(n, loewy)
        nonzero = {(NakModule(a, s), NakModule(b, t), i): v for a, s, b, t, i, v in rows}
        for X in indecomposables(A):
            for Y in indecomposables(A):
                for i in range(1, 5):
                    assert ext_dim_nak(A, X, Y, i) == nonzero.get((X, Y, i), 0), (key, X, Y, i)


def test_representation_roundtrip():
    A = NakAlgebra(3, 4)
    for M in indecomposables(A):
        X = to_representation(A, M)
        assert X.satisfies_relations()
        assert bqa.is_indecomposable(X)
        assert identify(A, X) == M


def test_engine_projectives_are_intervals():
    A = NakAlgebra(3, 2)
    for v in range(3):
        assert identify(A, bqa.projective(engine_algebra(3, 2), v)) == NakModule(v, 2)


def test_semisimple_case():
    A = NakAlgebra(2, 1)
    assert engine_algebra(2, 1).dimension == 2
    assert all(is_projective(A, M) for M in indecomposables(A))


@settings(max_examples=200, deadline=None)
@given(algebra_and_module())
def test_omega_squared_shifts_top_by_loewy(am):
    A, M = am
    Z = omega_power(A, M, 2)
    if is_projective(A, M):
        assert Z is None
    else:
        assert Z == NakModule((M.top + A.loewy) % A.n, M.length)


@settings(max_examples=200, deadline=None)
@given(algebra_and_module())
def test_nu_commutes_with_omega(am):
    A, M = am
    a, b = omega(A, nu(A, M)), omega(A, M)
    assert a == (None if b is None else nu(A, b))


@settings(max_examples=200, deadline=None)
@given(algebra_and_module())
def test_nu_is_a_permutation_preserving_length(am):
    A, M = am
    N = nu(A, M)
    assert N.length == M.length
    assert is_projective(A, N) == is_projective(A, M)


@settings(max_examples=60, deadline=None)
@given(algebra_and_module(n_max=3, loewy_max=4))
def test_omega_matches_engine_syzygy(am):
    A, M = am
    Z = bqa.syzygy(to_representation(A, M))
    assert identify(A, Z) == omega(A, M)
