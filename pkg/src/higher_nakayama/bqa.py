"""Finite-dimensional bound quiver algebras kQ/I and their right modules.

Conventions:

* paths compose left to right, so the path ``("a", "b")`` means *a then b*;
* modules are right modules, given as quiver representations: one vector
  space per vertex and, for an arrow ``a: s -> t``, a matrix of shape
  ``dims[t] x dims[s]``.  A path ``a1 a2 ... ak`` acts as ``X_ak @ ... @ X_a1``;
* a homomorphism ``X -> Y`` is a tuple of matrices indexed by vertex, the
  entry at ``v`` having shape ``Y.dims[v] x X.dims[v]``.

Everything is computed with exact rational arithmetic (:mod:`.exactlin`).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from . import exactlin as xl

Path = tuple[str, ...]
Morphism = tuple[np.ndarray, ...]


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[str, int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a quiver needs at least one vertex")
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        for name, s, t in self.arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"arrow {name!r} has an endpoint outside the quiver")

    @cached_property
    def _by_name(self) -> dict[str, tuple[str, int, int]]:
        return {a[0]: a for a in self.arrows}

    def arrow(self, name: str) -> tuple[str, int, int]:
        return self._by_name[name]

    def source(self, path: Path, start: Optional[int] = None) -> int:
        return start if not path else self.arrow(path[0])[1]

    def target(self, path: Path, start: Optional[int] = None) -> int:
        return start if not path else self.arrow(path[-1])[2]

    def out_arrows(self, v: int) -> list[tuple[str, int, int]]:
        return [a for a in self.arrows if a[1] == v]

    def in_arrows(self, v: int) -> list[tuple[str, int, int]]:
        return [a for a in self.arrows if a[2] == v]

    def paths_from(self, v: int, max_len: int) -> list[Path]:
        """All paths starting at ``v`` of length ``<= max_len`` (including the trivial one)."""
        out: list[Path] = [()]
        frontier: list[tuple[Path, int]] = [((), v)]
        for _ in range(max_len):
            nxt = []
            for p, end in frontier:
                for name, _, t in self.out_arrows(end):
                    nxt.append((p + (name,), t))
            out.extend(p for p, _ in nxt)
            frontier = nxt
        return out


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length at least two."""

    terms: tuple[tuple[Fraction, Path], ...]

    def __post_init__(self):
        terms = tuple((Fraction(c), tuple(p)) for c, p in self.terms)
        if not terms:
            raise ValueError("a relation needs at least one term")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def monomial(cls, *names: str) -> "Relation":
        return cls(((Fraction(1), tuple(names)),))


def _path_endpoints(q: Quiver, path: Path) -> tuple[int, int]:
    for a, b in zip(path, path[1:]):
        if q.arrow(a)[2] != q.arrow(b)[1]:
            raise ValueError(f"path {path} is not composable")
    return q.arrow(path[0])[1], q.arrow(path[-1])[2]


@dataclass(eq=False)
class BoundQuiverAlgebra:
    quiver: Quiver
    relations: tuple[Relation, ...]
    nilpotency: int
    basis: dict[tuple[int, int], list[Path]]
    # normal form of every path of length < nilpotency: (u, v, path) -> {basis index: coef}
    _normal: dict[tuple[int, int, Path], dict[int, Fraction]] = field(repr=False)
    mult_table: dict[tuple[int, int, int, int, int], dict[int, Fraction]] = field(repr=False)
    _resolutions: dict = field(default_factory=dict, repr=False)

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.basis.values())

    def reduce(self, u: int, path: Path) -> dict[int, Fraction]:
        """Coordinates of the residue of ``path`` (starting at ``u``) in the basis of its pair."""
        if len(path) >= self.nilpotency:
            return {}
        v = self.quiver.target(path, u)
        return dict(self._normal[(u, v, path)])

    def multiply(self, u: int, v: int, i: int, w: int, j: int) -> dict[int, Fraction]:
        """Product of basis element ``i`` of (u, v) with basis element ``j`` of (v, w)."""
        return self.mult_table[(u, v, i, w, j)]

    def path_matrix(self, X: "Representation", path: Path, start: int) -> np.ndarray:
        M = xl.identity(X.dims[start])
        for name in path:
            M = X.maps[name] @ M
        return M


def build_algebra(q: Quiver, rels: Sequence[Relation], L: int) -> BoundQuiverAlgebra:
    """Compute a path-residue basis and the multiplication table of kQ/(I + J^L).

    ``J^L`` (all paths of length at least ``L``) is added to the ideal, which
    keeps every graded piece finite.  Basis residues are the paths that are not
    leading terms of the reduced ideal, ordering longer paths first.
    """
    if L < 2:
        raise ValueError("nilpotency bound must be at least 2")
    rels = tuple(rels)
    rel_info = []
    for r in rels:
        ends = set()
        for _, p in r.terms:
            if len(p) < 2:
                raise ValueError(f"relation term {p} has length < 2 (not admissible)")
            ends.add(_path_endpoints(q, p))
        if len(ends) != 1:
            raise ValueError(f"relation {r} has non-parallel terms")
        (s, t), = ends
        rel_info.append((r, s, t, min(len(p) for _, p in r.terms)))

    paths: dict[tuple[int, int], list[Path]] = {(u, v): [] for u in range(q.vertex_count)
                                                 for v in range(q.vertex_count)}
    for u in range(q.vertex_count):
        for p in q.paths_from(u, L - 1):
            paths[(u, q.target(p, u))].append(p)

    basis: dict[tuple[int, int], list[Path]] = {}
    normal: dict[tuple[int, int, Path], dict[int, Fraction]] = {}
    for (u, v), plist in paths.items():
        order = sorted(plist, key=lambda p: (-len(p), p))
        col = {p: k for k, p in enumerate(order)}
        rows = []
        for r, s, t, m in rel_info:
            for pre in q.paths_from(u, L - 1 - m):
                if q.target(pre, u) != s:
                    continue
                for post in q.paths_from(t, L - 1 - m - len(pre)):
                    if q.target(post, t) != v:
                        continue
                    row = [Fraction(0)] * len(order)
                    nonzero = False
                    for c, p in r.terms:
                        full = pre + p + post
                        if len(full) < L:
                            row[col[full]] += c
                            nonzero = True
                    if nonzero:
                        rows.append(row)
        if rows:
            R, pivots = xl.rref(xl.mat(rows))
        else:
            R, pivots = xl.zeros(0, len(order)), []
        pivot_row = {pc: i for i, pc in enumerate(pivots)}
        free = [k for k in range(len(order)) if k not in pivot_row]
        # basis listed shortest first for readability
        free_sorted = sorted(free, key=lambda k: (len(order[k]), order[k]))
        basis[(u, v)] = [order[k] for k in free_sorted]
        bidx = {k: i for i, k in enumerate(free_sorted)}
        for k, p in enumerate(order):
            if k in bidx:
                normal[(u, v, p)] = {bidx[k]: Fraction(1)}
            else:
                row = R[pivot_row[k]]
                normal[(u, v, p)] = {bidx[f]: -row[f] for f in free if row[f] != 0}

    mult: dict[tuple[int, int, int, int, int], dict[int, Fraction]] = {}
    n = q.vertex_count
    for u in range(n):
        for v in range(n):
            for i, b1 in enumerate(basis[(u, v)]):
                for w in range(n):
                    for j, b2 in enumerate(basis[(v, w)]):
                        prod = b1 + b2
                        mult[(u, v, i, w, j)] = ({} if len(prod) >= L
                                                 else dict(normal[(u, w, prod)]))
    A = BoundQuiverAlgebra(q, rels, L, basis, normal, mult)
    if any(len(p) >= L for b in basis.values() for p in b):
        raise ValueError("radical power rad^L does not vanish")
    return A


def check_associativity(A: BoundQuiverAlgebra) -> bool:
    """Exhaustive associativity check of the multiplication table on basis triples."""
    n = A.vertex_count

    def mul_vec(u, v, x: dict, w, j):
        out: dict[int, Fraction] = {}
        for i, c in x.items():
            for k, c2 in A.multiply(u, v, i, w, j).items():
                out[k] = out.get(k, Fraction(0)) + c * c2
        return {k: c for k, c in out.items() if c != 0}

    def vec_mul(u, v, i, w, y: dict):
        out: dict[int, Fraction] = {}
        for j, c in y.items():
            for k, c2 in A.multiply(u, v, i, w, j).items():
                out[k] = out.get(k, Fraction(0)) + c * c2
        return {k: c for k, c in out.items() if c != 0}

    for u in range(n):
        for v in range(n):
            for w in range(n):
                for x in range(n):
                    for i in range(len(A.basis[(u, v)])):
                        for j in range(len(A.basis[(v, w)])):
                            left = A.multiply(u, v, i, w, j)
                            for k in range(len(A.basis[(w, x)])):
                                a = mul_vec(u, w, left, x, k)
                                b = vec_mul(u, v, i, x, A.multiply(v, w, j, x, k))
                                if a != b:
                                    return False
    return True


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: BoundQuiverAlgebra
    dims: tuple[int, ...]
    maps: dict[str, np.ndarray]

    def __post_init__(self):
        q = self.algebra.quiver
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if len(self.dims) != q.vertex_count or any(d < 0 for d in self.dims):
            raise ValueError("one nonnegative dimension per vertex required")
        maps = {}
        for name, s, t in q.arrows:
            M = self.maps.get(name)
            if M is None:
                M = xl.zeros(self.dims[t], self.dims[s])
            else:
                M = xl.mat(M, shape=(self.dims[t], self.dims[s])) if not isinstance(M, np.ndarray) else M
            if M.shape != (self.dims[t], self.dims[s]):
                raise ValueError(f"map of arrow {name!r} has shape {M.shape}, "
                                 f"expected {(self.dims[t], self.dims[s])}")
            M.flags.writeable = False
            maps[name] = M
        object.__setattr__(self, "maps", maps)

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dimension == 0

    def key(self) -> tuple:
        return (self.dims, tuple((k, tuple(self.maps[k].flat)) for k in sorted(self.maps)))

    def satisfies_relations(self) -> bool:
        q = self.algebra.quiver
        for r in self.algebra.relations:
            s = q.arrow(r.terms[0][1][0])[1]
            t = q.arrow(r.terms[0][1][-1])[2]
            total = xl.zeros(self.dims[t], self.dims[s])
            for c, p in r.terms:
                total = total + c * self.algebra.path_matrix(self, p, s)
            if not xl.is_zero(total):
                return False
        # truncation: all paths of length L act as zero
        for u in range(q.vertex_count):
            for p in q.paths_from(u, self.algebra.nilpotency):
                if len(p) == self.algebra.nilpotency:
                    if not xl.is_zero(self.algebra.path_matrix(self, p, u)):
                        return False
        return True


def zero_rep(A: BoundQuiverAlgebra) -> Representation:
    return Representation(A, (0,) * A.vertex_count, {})


def simple(A: BoundQuiverAlgebra, v: int) -> Representation:
    dims = [0] * A.vertex_count
    dims[v] = 1
    return Representation(A, tuple(dims), {})


def projective(A: BoundQuiverAlgebra, v: int) -> Representation:
    """The indecomposable projective ``P_v = e_v A``; arrows act by right multiplication."""
    if not 0 <= v < A.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    n = A.vertex_count
    dims = tuple(len(A.basis[(v, w)]) for w in range(n))
    maps = {}
    for name, s, t in A.quiver.arrows:
        M = xl.zeros(dims[t], dims[s])
        for j, p in enumerate(A.basis[(v, s)]):
            for i, c in A.reduce(v, p + (name,)).items():
                M[i, j] = c
        maps[name] = M
    return Representation(A, dims, maps)


def injective(A: BoundQuiverAlgebra, v: int) -> Representation:
    """The indecomposable injective ``I_v = D(A e_v)``, built as a dual of paths ending at ``v``."""
    n = A.vertex_count
    dims = tuple(len(A.basis[(w, v)]) for w in range(n))
    maps = {}
    for name, s, t in A.quiver.arrows:
        # (f . a)(p) = f(a p) for p: t -> v; matrix column = dual basis of (s, v)
        M = xl.zeros(dims[t], dims[s])
        for i, p in enumerate(A.basis[(t, v)]):
            for j, c in A.reduce(s, (name,) + p).items():
                M[i, j] = c
        maps[name] = M
    return Representation(A, dims, maps)


def direct_sum(*reps: Representation) -> Representation:
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    A = reps[0].algebra
    if any(r.algebra is not A for r in reps):
        raise ValueError("summands live over different algebras")
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(A.vertex_count))
    maps = {name: xl.block_diag([r.maps[name] for r in reps]) for name, _, _ in A.quiver.arrows}
    return Representation(A, dims, maps)


def _same_algebra(X: Representation, Y: Representation):
    if X.algebra is not Y.algebra:
        raise ValueError("representations are over different algebras")


def hom(X: Representation, Y: Representation) -> list[Morphism]:
    """Basis of Hom(X, Y): solutions of ``phi_t X_a = Y_a phi_s`` for every arrow ``a: s -> t``."""
    _same_algebra(X, Y)
    q = X.algebra.quiver
    n = q.vertex_count
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += Y.dims[v] * X.dims[v]

    def var(v, i, j):
        return offsets[v] + i * X.dims[v] + j

    rows = []
    for name, s, t in q.arrows:
        Xa, Ya = X.maps[name], Y.maps[name]
        for i in range(Y.dims[t]):
            for j in range(X.dims[s]):
                row = [Fraction(0)] * total
                nonzero = False
                for k in range(X.dims[t]):
                    c = Xa[k, j]
                    if c != 0:
                        row[var(t, i, k)] += c
                        nonzero = True
                for k in range(Y.dims[s]):
                    c = Ya[i, k]
                    if c != 0:
                        row[var(s, k, j)] -= c
                        nonzero = True
                if nonzero:
                    rows.append(row)
    system = xl.mat(rows) if rows else xl.zeros(0, total)
    _, kernel = xl.rank_kernel(system)
    out = []
    for vec in kernel:
        phi = []
        for v in range(n):
            block = vec[offsets[v]:offsets[v] + Y.dims[v] * X.dims[v], 0]
            phi.append(np.array(block, dtype=object).reshape(Y.dims[v], X.dims[v]))
        out.append(tuple(phi))
    return out


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g o f``."""
    return tuple(gv @ fv for gv, fv in zip(g, f))


def flatten(f: Morphism) -> list[Fraction]:
    return [x for block in f for x in block.flat]


def is_morphism(X: Representation, Y: Representation, f: Morphism) -> bool:
    for name, s, t in X.algebra.quiver.arrows:
        if not xl.is_zero(f[t] @ X.maps[name] - Y.maps[name] @ f[s]):
            return False
    return True


def _span_rank(vectors: list[list[Fraction]]) -> int:
    if not vectors or not vectors[0]:
        return 0
    return xl.rank(xl.mat(vectors))


def top_dims(X: Representation) -> tuple[int, ...]:
    """Dimension of ``X / rad X`` at each vertex."""
    out = []
    for v in range(X.algebra.vertex_count):
        imgs = [X.maps[name] for name, _, _ in X.algebra.quiver.in_arrows(v)]
        r = xl.rank(np.concatenate(imgs, axis=1)) if imgs and X.dims[v] else 0
        out.append(X.dims[v] - r)
    return tuple(out)


def proj_cover(X: Representation) -> tuple[Representation, Morphism]:
    """Projective cover ``P -> X``; summands ordered by vertex, then by chosen top vector."""
    A = X.algebra
    q = A.quiver
    n = q.vertex_count
    if X.is_zero():
        Z = zero_rep(A)
        return Z, tuple(xl.zeros(0, 0) for _ in range(n))
    generators: list[tuple[int, np.ndarray]] = []
    for v in range(n):
        if X.dims[v] == 0:
            continue
        cols = [X.maps[name] for name, _, _ in q.in_arrows(v)]
        span = np.concatenate(cols, axis=1) if cols else xl.zeros(X.dims[v], 0)
        r = xl.rank(span) if span.size else 0
        for j in range(X.dims[v]):
            if r == X.dims[v]:
                break
            e = xl.zeros(X.dims[v], 1)
            e[j, 0] = Fraction(1)
            trial = np.concatenate([span, e], axis=1)
            r2 = xl.rank(trial)
            if r2 > r:
                span, r = trial, r2
                generators.append((v, e))
    summands = [projective(A, v) for v, _ in generators]
    P = direct_sum(*summands)
    cover = []
    for w in range(n):
        blocks = []
        for (v, x), Pv in zip(generators, summands):
            cols = [A.path_matrix(X, p, v) @ x for p in A.basis[(v, w)]]
            blocks.append(np.concatenate(cols, axis=1) if cols else xl.zeros(X.dims[w], 0))
        cover.append(np.concatenate(blocks, axis=1) if blocks else xl.zeros(X.dims[w], 0))
    return P, tuple(cover)


def _kernel(P: Representation, f: Morphism) -> tuple[Representation, Morphism]:
    """Kernel of ``f: P -> X`` together with its inclusion into ``P``."""
    A = P.algebra
    n = A.vertex_count
    incl = []
    for w in range(n):
        if P.dims[w] == 0:
            incl.append(xl.zeros(0, 0))
            continue
        _, basis = xl.rank_kernel(f[w])
        incl.append(np.concatenate(basis, axis=1) if basis else xl.zeros(P.dims[w], 0))
    dims = tuple(K.shape[1] for K in incl)
    maps = {}
    for name, s, t in A.quiver.arrows:
        M = xl.zeros(dims[t], dims[s])
        if dims[s] and dims[t]:
            image = P.maps[name] @ incl[s]
            for j in range(dims[s]):
                sol = xl.solve(incl[t], image[:, j:j + 1])
                if sol is None:
                    raise ArithmeticError("kernel is not a subrepresentation")
                M[:, j] = sol[:, 0]
        maps[name] = M
    return Representation(A, dims, maps), tuple(incl)


def syzygy(X: Representation) -> Representation:
    """Heller syzygy: kernel of the projective cover of ``X``."""
    P, cover = proj_cover(X)
    if P.is_zero():
        return zero_rep(X.algebra)
    return _kernel(P, cover)[0]


def resolution(X: Representation, stage: int) -> list[tuple[Representation, Morphism]]:
    """Minimal projective resolution ``P_stage -> ... -> P_0 -> X``.

    Entry ``i`` is ``(P_i, d_i)`` with ``d_0: P_0 -> X`` and ``d_i: P_i -> P_{i-1}``.
    Results are memoized on the algebra per (module, stage).
    """
    A = X.algebra
    key = X.key()
    cached = A._resolutions.get(key)
    if cached is not None and len(cached) > stage:
        return cached[:stage + 1]
    n = A.vertex_count
    out: list[tuple[Representation, Morphism]] = []
    current, incl = X, None
    for i in range(stage + 1):
        if current.is_zero():
            prev_dims = out[-1][0].dims if out else X.dims
            out.append((zero_rep(A), tuple(xl.zeros(prev_dims[v], 0) for v in range(n))))
            continue
        P, cover = proj_cover(current)
        out.append((P, cover if incl is None else compose(incl, cover)))
        current, incl = _kernel(P, cover)
    A._resolutions[key] = out
    return out


def _precompose_rank(basis: list[Morphism], f: Morphism) -> int:
    return _span_rank([flatten(compose(phi, f)) for phi in basis])


def ext_dim(X: Representation, Y: Representation, i: int) -> int:
    """dim Ext^i(X, Y) as the i-th cohomology of Hom(P_., Y) for the minimal resolution of X."""
    _same_algebra(X, Y)
    if i < 1:
        raise ValueError("Ext degree must be positive")
    res = resolution(X, i + 1)
    P_i = res[i][0]
    if P_i.is_zero():
        return 0
    hom_i = hom(P_i, Y)
    if not hom_i:
        return 0
    # delta_i: Hom(P_i, Y) -> Hom(P_{i+1}, Y), precomposition with d_{i+1}
    P_next, d_next = res[i + 1]
    rank_out = 0 if P_next.is_zero() else _precompose_rank(hom_i, d_next)
    # delta_{i-1}: Hom(P_{i-1}, Y) -> Hom(P_i, Y), precomposition with d_i
    P_prev = res[i - 1][0]
    rank_in = _precompose_rank(hom(P_prev, Y), res[i][1]) if not P_prev.is_zero() else 0
    return len(hom_i) - rank_out - rank_in


def stable_hom_dim(X: Representation, Y: Representation) -> int:
    """dim of Hom(X, Y) modulo maps factoring through a projective.

    Such maps all factor through the projective cover ``P(Y) -> Y``, so the
    quotient is taken by the image of post-composition with that cover.
    """
    _same_algebra(X, Y)
    h = hom(X, Y)
    if not h:
        return 0
    PY, pi = proj_cover(Y)
    if PY.is_zero():
        return len(h)
    through = hom(X, PY)
    return len(h) - _span_rank([flatten(compose(pi, psi)) for psi in through])


def _trace(f: Morphism) -> Fraction:
    return sum((sum(np.diagonal(b), Fraction(0)) for b in f), Fraction(0))


def _splits(f: Morphism) -> bool:
    """True when the characteristic polynomial of ``f`` has two distinct irreducible factors."""
    import sympy

    blocks = [b for b in f if b.shape[0]]
    M = sympy.Matrix(xl.block_diag(blocks).tolist())
    x = sympy.Symbol("x")
    _, factors = sympy.factor_list(M.charpoly(x).as_expr(), x)
    return len(factors) > 1


def is_indecomposable(X: Representation) -> bool:
    """Indecomposability of ``X`` via the trace-form radical of End(X).

    In characteristic zero the radical of End(X) is the kernel of the trace form
    ``(f, g) -> tr(f g)``.  A one-dimensional top End/rad means End(X) is local.
    Otherwise the basis elements and their pairwise sums are searched for an
    endomorphism whose characteristic polynomial has two coprime factors, which
    splits ``X`` by primary decomposition.  A top of dimension > 1 with no such
    witness is treated as a division ring (indecomposable).
    """
    if X.is_zero():
        raise ValueError("the zero module is neither decomposable nor indecomposable")
    E = hom(X, X)
    gram = xl.mat([[_trace(compose(f, g)) for g in E] for f in E])
    top = xl.rank(gram)
    if top == 1:
        return True
    candidates = list(E)
    candidates += [tuple(a + b for a, b in zip(E[i], E[j]))
                   for i in range(len(E)) for j in range(i + 1, len(E))]
    return not any(_splits(f) for f in candidates)


# ---------------------------------------------------------------------------
# JSON


def algebra_to_json(A: BoundQuiverAlgebra) -> dict:
    return {
        "type": "bound_quiver",
        "vertices": A.vertex_count,
        "arrows": [{"name": n, "source": s, "target": t} for n, s, t in A.quiver.arrows],
        "relations": [[{"coef": xl.rat_to_str(c), "path": list(p)} for c, p in r.terms]
                      for r in A.relations],
        "nilpotency": A.nilpotency,
    }


def algebra_from_json(data: dict | str) -> BoundQuiverAlgebra:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("type") != "bound_quiver":
        raise ValueError("expected an algebra of type 'bound_quiver'")
    q = Quiver(int(data["vertices"]),
               tuple((a["name"], int(a["source"]), int(a["target"])) for a in data["arrows"]))
    rels = [Relation(tuple((xl.rat_from_str(t.get("coef", "1")), tuple(t["path"])) for t in r))
            for r in data.get("relations", [])]
    return build_algebra(q, rels, int(data["nilpotency"]))


def rep_to_json(X: Representation) -> dict:
    return {"dims": list(X.dims), "maps": {k: xl.mat_to_json(M) for k, M in X.maps.items()}}


def rep_from_json(A: BoundQuiverAlgebra, data: dict | str) -> Representation:
    if isinstance(data, str):
        data = json.loads(data)
    dims = tuple(int(d) for d in data["dims"])
    maps = {}
    for name, s, t in A.quiver.arrows:
        if name in data.get("maps", {}):
            maps[name] = xl.mat(data["maps"][name], shape=(dims[t], dims[s]))
    X = Representation(A, dims, maps)
    if not X.satisfies_relations():
        raise ValueError("representation does not satisfy the relations")
    return X
