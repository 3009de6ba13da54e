import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higher_nakayama import constructions as c
from higher_nakayama.cluster import is_dRF_bruteforce


def test_tubular_points():
    assert c.tubular_n((3, 3, 3), 2) == 1
    assert c.tubular_n((2, 2, 2, 2), 3) == 1
    assert c.tubular_n((2, 3, 6), 2) == 2
    assert c.tubular_n((2, 4, 4), 3) == 2


@pytest.mark.parametrize("kind,p", sorted(c.TUBULAR_WEIGHTS.items()))
def test_tubular_is_a_fraccy_special_case(kind, p):
    for d in range(2, 13):
        assert c.tubular_n(kind, d) == c.fraccy_params(p, p, d, 1).n_trivext


def test_fraccy_rejects_nonnegative_exponent():
    with pytest.raises(ValueError):
        c.fraccy_params(1, 3, 2, 1)


def test_trivext_counts():
    assert c.trivext_count(1, 1, 2, 2) == 6
    assert c.trivext_count(2, 3, 2, 1) == 2 * 2 + 3 + 2
    with pytest.raises(ValueError):
        c.trivext_count(3, 2, 2, 1)


@pytest.mark.parametrize("d,ell", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (5, 1), (6, 1)])
def test_trivext_witness_size(d, ell):
    ok, witness = is_dRF_bruteforce(d * ell, 2, d)
    assert ok and len(witness) == c.trivext_count(1, 1, d, ell) == (d + 1) * ell


def test_trivrf_and_homogeneous():
    assert c.trivrf_count(3, 2) == 6
    assert c.homogeneous_tensor(2, [1, 1]) == (2, 2)
    assert c.homogeneous_tensor(2, [1, 1, 1]) == (2, 3)
    assert c.homogeneous_trivext_reps(2, 2, 1) == 4
    assert c.homogeneous_trivext_reps(2, 1, 1) == 3


def test_homogeneous_reps_via_fraccy():
    for r in range(2, 9):
        for d in range(1, 9):
            for ell in range(1, 4):
                p = c.fraccy_params(r, d * (r - 1), d, ell)
                assert p.orbit_reps == c.homogeneous_trivext_reps(r, d, ell)


def test_preproj():
    rep = c.preproj_nakayama(4)
    assert (rep.nakayama.n, rep.nakayama.loewy) == (4, 3)
    assert rep.verdict.drf and rep.verdict.d == 3
    assert all(c.preproj_nakayama(n).verdict.drf for n in range(3, 51))
    with pytest.raises(ValueError):
        c.preproj_nakayama(2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_preproj_brute_force(n):
    assert is_dRF_bruteforce(n, n - 1, 3)[0]


def test_wild_family():
    assert c.wild_family_n(4, 2, 1) == 4
    for m in range(2, 11):
        for ell in range(1, 6):
            assert c.wild_family_n(m, 2, ell) == 4 * ell
            assert c.wild_family_n(m, 3 * m - 2, ell) == m * ell


def test_cross_section_sizes():
    assert c.cross_section_size(1, 1, 1, 0) == 1
    assert c.cross_section_size(1, 1, 1, 1) == 2
    assert c.cross_section_set(1, 1, 1, 1, 20) == {0, 1}


@pytest.mark.parametrize("args", [(1, 1, 1, 1, 20), (2, 3, 2, 1, 40), (1, 1, 3, 2, 30)])
def test_cross_section_examples(args):
    assert c.cross_section_verify(*args)


def test_cross_section_window_guard():
    with pytest.raises(ValueError):
        c.cross_section_verify(2, 3, 2, 1, 10)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
def test_cross_section_property(u, v, a, b):
    assert c.cross_section_verify(u, v, a, b, 3 * (a * u + b * v) + 5)


def test_report_json():
    rep = c.preproj_nakayama(5)
    data = rep.to_json()
    assert data["kind"] == "preproj"
    assert data["nakayama"] == {"type": "nakayama", "n": 5, "loewy": 4}
    assert data["verdict"]["drf"] is True
