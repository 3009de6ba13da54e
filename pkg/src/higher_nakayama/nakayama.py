"""Self-injective Nakayama algebras Lambda(n, l) = k[cyclic quiver]/rad^l.

The quiver has vertices ``0..n-1`` and arrows ``a_i: i -> i+1 (mod n)``.  Every
indecomposable module is uniserial and is recorded as an interval ``M(a, t)``:
top ``S_a``, composition factors ``S_a, S_{a+1}, ..., S_{a+t-1}`` from the top.

The shift formulas below (syzygy, Nakayama functor, AR translate) are checked
against the generic engine in :mod:`.bqa` by the test suite.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import bqa
from . import exactlin as xl


@dataclass(frozen=True)
class NakAlgebra:
    n: int
    loewy: int

    def __post_init__(self):
        if self.n < 1 or self.loewy < 1:
            raise ValueError("need n >= 1 and Loewy length >= 1")

    def engine(self) -> bqa.BoundQuiverAlgebra:
        return engine_algebra(self.n, self.loewy)

    def to_json(self) -> dict:
        return {"type": "nakayama", "n": self.n, "loewy": self.loewy}

    @classmethod
    def from_json(cls, data: dict | str) -> "NakAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("type") != "nakayama":
            raise ValueError("expected an algebra of type 'nakayama'")
        return cls(int(data["n"]), int(data["loewy"]))


@dataclass(frozen=True, order=True)
class NakModule:
    top: int
    length: int

    def __str__(self):
        return f"M({self.top},{self.length})"

    def to_json(self) -> dict:
        return {"top": self.top, "len": self.length}

    @classmethod
    def from_json(cls, data: dict | str) -> "NakModule":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["top"]), int(data["len"]))


def arrow_name(i: int) -> str:
    return f"a{i}"


@lru_cache(maxsize=None)
def engine_algebra(n: int, loewy: int) -> bqa.BoundQuiverAlgebra:
    """Lambda(n, l) as a bound quiver algebra; for l = 1 the arrowless quiver."""
    if loewy == 1:
        return bqa.build_algebra(bqa.Quiver(n, ()), [], 2)
    q = bqa.Quiver(n, tuple((arrow_name(i), i, (i + 1) % n) for i in range(n)))
    rels = [bqa.Relation.monomial(*(arrow_name((i + j) % n) for j in range(loewy)))
            for i in range(n)]
    return bqa.build_algebra(q, rels, loewy)


def _check(A: NakAlgebra, M: NakModule) -> None:
    if not (0 <= M.top < A.n and 1 <= M.length <= A.loewy):
        raise ValueError(f"{M} is not a module over Lambda({A.n},{A.loewy})")


def indecomposables(A: NakAlgebra) -> list[NakModule]:
    """All n*l indecomposables, ordered by (top, length)."""
    return [NakModule(a, t) for a in range(A.n) for t in range(1, A.loewy + 1)]


def is_projective(A: NakAlgebra, M: NakModule) -> bool:
    return M.length == A.loewy


def omega(A: NakAlgebra, M: NakModule) -> Optional[NakModule]:
    """Syzygy; ``None`` for projective modules."""
    _check(A, M)
    if is_projective(A, M):
        return None
    return NakModule((M.top + M.length) % A.n, A.loewy - M.length)


def omega_power(A: NakAlgebra, M: NakModule, i: int) -> Optional[NakModule]:
    for _ in range(i):
        if M is None:
            return None
        M = omega(A, M)
    return M


def nu(A: NakAlgebra, M: NakModule) -> NakModule:
    """Nakayama functor; sends P_a to the injective hull of S_a."""
    _check(A, M)
    return NakModule((M.top - A.loewy + 1) % A.n, M.length)


def tau(A: NakAlgebra, M: NakModule) -> Optional[NakModule]:
    """AR translate, computed as Omega^2 followed by nu."""
    _check(A, M)
    if is_projective(A, M):
        return None
    return nu(A, omega(A, omega(A, M)))


def to_representation(A: NakAlgebra, M: NakModule) -> bqa.Representation:
    _check(A, M)
    E = A.engine()
    # composition factor j (0-based from the top) sits at vertex top + j
    vertex = [(M.top + j) % A.n for j in range(M.length)]
    local: list[int] = []
    seen = [0] * A.n
    for v in vertex:
        local.append(seen[v])
        seen[v] += 1
    dims = tuple(seen)
    maps = {}
    if A.loewy > 1:
        for i in range(A.n):
            M_i = xl.zeros(dims[(i + 1) % A.n], dims[i])
            for j in range(M.length - 1):
                if vertex[j] == i:
                    M_i[local[j + 1], local[j]] = Fraction(1)
            maps[arrow_name(i)] = M_i
    return bqa.Representation(E, dims, maps)


def identify(A: NakAlgebra, X: bqa.Representation) -> Optional[NakModule]:
    """Interval data of an indecomposable ``X`` (``None`` for zero).

    Uses only the top and the total dimension, which determine a uniserial module.
    """
    if X.is_zero():
        return None
    top = bqa.top_dims(X)
    if sum(top) != 1:
        raise ValueError("representation is not uniserial")
    return NakModule(top.index(1), X.dimension)


@lru_cache(maxsize=None)
def stable_hom_nak(A: NakAlgebra, X: NakModule, Y: NakModule) -> int:
    return bqa.stable_hom_dim(to_representation(A, X), to_representation(A, Y))


def ext_dim_nak(A: NakAlgebra, X: NakModule, Y: NakModule, i: int) -> int:
    """dim Ext^i(X, Y) as the stable Hom from Omega^i X to Y (self-injective case)."""
    if i < 1:
        raise ValueError("Ext degree must be positive")
    _check(A, Y)
    Z = omega_power(A, X, i)
    if Z is None:
        return 0
    return stable_hom_nak(A, Z, Y)
