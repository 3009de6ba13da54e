"""Brute-force search for d-cluster-tilting modules over Lambda(n, l).

A basic d-cluster-tilting module is a set ``U`` of indecomposables with

    {X : Ext^i(U, X) = 0 for 0 < i < d} = add U = {X : Ext^i(X, U) = 0 for 0 < i < d}.

Any such ``U`` is a maximal d-rigid set, so it suffices to enumerate maximal
cliques of the graph whose vertices are self-rigid indecomposables and whose
edges join pairs with vanishing Ext in both directions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .nakayama import NakAlgebra, NakModule, ext_dim_nak, indecomposables, nu

CandidateSet = tuple[int, ...]


@dataclass(frozen=True)
class ExtTable:
    algebra: NakAlgebra
    d: int
    modules: tuple[NakModule, ...]
    table: dict[tuple[int, int, int], int]

    def vanishes(self, x: int, y: int) -> bool:
        """Ext^i(modules[x], modules[y]) = 0 for all 0 < i < d."""
        return all(self.table[(x, y, i)] == 0 for i in range(1, self.d))

    def index(self, M: NakModule) -> int:
        return self.modules.index(M)


def ext_table(A: NakAlgebra, d: int) -> ExtTable:
    if d < 1:
        raise ValueError("d must be positive")
    mods = tuple(indecomposables(A))
    table = {}
    for x, X in enumerate(mods):
        for y, Y in enumerate(mods):
            for i in range(1, d):
                table[(x, y, i)] = ext_dim_nak(A, X, Y, i)
    return ExtTable(A, d, mods, table)


def maximal_cliques(vertices: list[int], adj: dict[int, set[int]]) -> list[CandidateSet]:
    """Bron-Kerbosch with Tomita pivoting; vertices are visited in increasing order.

    Output cliques are sorted tuples, listed in lexicographic order.
    """
    out: list[CandidateSet] = []

    def expand(R: list[int], P: set[int], X: set[int]) -> None:
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(sorted(P | X), key=lambda u: len(adj[u] & P))
        for v in sorted(P - adj[pivot]):
            expand(R + [v], P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    if not vertices:
        return [()]
    expand([], set(vertices), set())
    return sorted(out)


def rigid_vertices(T: ExtTable) -> list[int]:
    return [x for x in range(len(T.modules)) if T.vanishes(x, x)]


def d_rigid_cliques(T: ExtTable) -> list[CandidateSet]:
    verts = rigid_vertices(T)
    adj = {x: {y for y in verts if y != x and T.vanishes(x, y) and T.vanishes(y, x)}
           for x in verts}
    return maximal_cliques(verts, adj)


def is_rigid(T: ExtTable, U: CandidateSet) -> bool:
    return all(T.vanishes(x, y) for x in U for y in U)


def is_dCT(T: ExtTable, U: CandidateSet) -> bool:
    """Whether ``U`` equals both of its Ext^{1..d-1}-perpendicular categories."""
    if not is_rigid(T, U):
        raise ValueError(f"candidate set {U} is not {T.d}-rigid")
    members = set(U)
    all_idx = range(len(T.modules))
    right_perp = {x for x in all_idx if all(T.vanishes(u, x) for u in U)}
    left_perp = {x for x in all_idx if all(T.vanishes(x, u) for u in U)}
    return right_perp <= members and left_perp <= members


def all_dCT(n: int, loewy: int, d: int) -> list[list[NakModule]]:
    """All basic d-cluster-tilting modules, each as a sorted list of interval modules."""
    T = ext_table(NakAlgebra(n, loewy), d)
    return [[T.modules[i] for i in U] for U in d_rigid_cliques(T) if is_dCT(T, U)]


def is_dRF_bruteforce(n: int, loewy: int, d: int) -> tuple[bool, Optional[list[NakModule]]]:
    """Decide d-representation-finiteness by exhaustive search; returns a witness if found."""
    T = ext_table(NakAlgebra(n, loewy), d)
    for U in d_rigid_cliques(T):
        if is_dCT(T, U):
            return True, [T.modules[i] for i in U]
    return False, None


def nu_image(A: NakAlgebra, U: list[NakModule]) -> list[NakModule]:
    return sorted(nu(A, M) for M in U)
