from fractions import Fraction as F

import pytest

from higher_nakayama import bqa
from higher_nakayama.nakayama import engine_algebra


def test_cyclic_two_vertex_dimension():
    A = engine_algebra(2, 2)
    assert A.dimension == 4
    assert bqa.check_associativity(A)


def test_a3_with_relation(a3_ab):
    assert a3_ab.dimension == 5
    assert bqa.check_associativity(a3_ab)
    P0 = bqa.projective(a3_ab, 0)
    assert P0.dims == (1, 1, 0)


def test_kronecker_projectives(kronecker):
    assert bqa.projective(kronecker, 0).dims == (1, 2)
    assert bqa.projective(kronecker, 1).dims == (0, 1)


def test_commutativity_relation():
    # square with one commutativity relation: dimension 4 + 4 + 1 = 9
    q = bqa.Quiver(4, (("a", 0, 1), ("b", 1, 3), ("c", 0, 2), ("e", 2, 3)))
    rel = bqa.Relation(((F(1), ("a", "b")), (F(-1), ("c", "e"))))
    A = bqa.build_algebra(q, [rel], 3)
    assert A.dimension == 9
    assert bqa.check_associativity(A)
    assert bqa.projective(A, 0).dims == (1, 1, 1, 1)


@pytest.mark.parametrize("bad", [
    [bqa.Relation.monomial("a")],
    [bqa.Relation(((F(1), ("a", "b")), (F(1), ("b",))))],
])
def test_build_rejects_bad_relations(bad):
    q = bqa.Quiver(3, (("a", 0, 1), ("b", 1, 2)))
    with pytest.raises(ValueError):
        bqa.build_algebra(q, bad, 3)


def test_hom_dimensions(a3_ab):
    S = [bqa.simple(a3_ab, v) for v in range(3)]
    P = [bqa.projective(a3_ab, v) for v in range(3)]
    assert len(bqa.hom(S[0], S[0])) == 1
    assert len(bqa.hom(S[0], S[1])) == 0
    for v in range(3):
        for X in P + S:
            assert len(bqa.hom(P[v], X)) == X.dims[v]


def test_hom_elements_are_morphisms(kronecker):
    P0 = bqa.projective(kronecker, 0)
    for f in bqa.hom(P0, P0):
        assert bqa.is_morphism(P0, P0, f)
    assert len(bqa.hom(P0, P0)) == 1


def test_proj_cover_and_syzygy(a3_ab):
    S1 = bqa.simple(a3_ab, 0)
    P, pi = bqa.proj_cover(S1)
    assert P.dims == (1, 1, 0)
    assert bqa.syzygy(S1).dims == (0, 1, 0)


def test_ext_through_resolution(a3_ab):
    S = [bqa.simple(a3_ab, v) for v in range(3)]
    assert bqa.ext_dim(S[0], S[2], 2) == 1
    assert bqa.ext_dim(S[0], S[1], 1) == 1
    assert bqa.ext_dim(S[0], S[2], 1) == 0
    assert bqa.ext_dim(S[0], S[2], 3) == 0
    assert bqa.ext_dim(bqa.projective(a3_ab, 0), S[2], 1) == 0


def test_stable_hom_on_nakayama():
    A = engine_algebra(2, 2)
    S0, S1 = bqa.simple(A, 0), bqa.simple(A, 1)
    assert bqa.stable_hom_dim(S0, S0) == 1
    assert bqa.stable_hom_dim(bqa.projective(A, 0), bqa.projective(A, 0)) == 0
    assert bqa.ext_dim(S0, S1, 1) == 1


def test_indecomposable():
    A = engine_algebra(2, 2)
    S0 = bqa.simple(A, 0)
    assert bqa.is_indecomposable(S0)
    assert bqa.is_indecomposable(bqa.projective(A, 0))
    assert not bqa.is_indecomposable(bqa.direct_sum(S0, S0))
    assert not bqa.is_indecomposable(bqa.direct_sum(S0, bqa.simple(A, 1)))
    with pytest.raises(ValueError):
        bqa.is_indecomposable(bqa.zero_rep(A))


def test_kronecker_regular_module(kronecker):
    # k^1 -> k^1 with x = 1, y = 0 is indecomposable; x = y = 0 is not
    X = bqa.Representation(kronecker, (1, 1), {"x": [[1]], "y": [[0]]})
    Y = bqa.Representation(kronecker, (1, 1), {})
    assert bqa.is_indecomposable(X)
    assert not bqa.is_indecomposable(Y)


def test_injective_is_dual_shape(a3_ab):
    assert bqa.injective(a3_ab, 2).dims == (0, 1, 1)
    assert bqa.injective(a3_ab, 0).dims == (1, 0, 0)


def test_representation_validation(a3_ab):
    with pytest.raises(ValueError):
        bqa.Representation(a3_ab, (1, 1), {})
    with pytest.raises(ValueError):
        bqa.Representation(a3_ab, (1, 1, 0), {"a": [[1, 0]]})
    bad = {"dims": [1, 1, 1], "maps": {"a": [["1"]], "b": [["1"]]}}
    with pytest.raises(ValueError):
        bqa.rep_from_json(a3_ab, bad)


def test_json_roundtrip(a3_ab):
    data = bqa.algebra_to_json(a3_ab)
    B = bqa.algebra_from_json(data)
    assert B.dimension == a3_ab.dimension
    X = bqa.projective(a3_ab, 0)
    Y = bqa.rep_from_json(B, bqa.rep_to_json(X))
    assert Y.dims == X.dims
    assert bqa.rep_to_json(Y) == bqa.rep_to_json(X)
