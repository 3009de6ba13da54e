"""(d+1)-angulations of the regular N-gon, N = (d-1)*l + 2.

Corners are numbered 0..N-1 clockwise.  A diagonal is a pair ``(x, y)`` with
``x < y``; it is a (d-1)-diagonal when it is not an outer edge and
``y - x - 1`` is divisible by ``d - 1``.  The rotation ``rho`` moves every
corner one step anticlockwise, ``rho([x, y]) = [x-1, y-1]`` mod N.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, gcd
from typing import Optional

from .cluster import maximal_cliques

Diagonal = tuple[int, int]
Angulation = tuple[Diagonal, ...]


@dataclass(frozen=True)
class PolygonCtx:
    d: int
    pieces: int

    def __post_init__(self):
        if self.d < 1 or self.pieces < 1:
            raise ValueError("d and the number of pieces must be positive")

    @property
    def N(self) -> int:
        return (self.d - 1) * self.pieces + 2


def fuss_catalan(d: int, pieces: int) -> int:
    """Number of (d+1)-angulations with ``pieces`` pieces."""
    num = comb(d * pieces, pieces)
    den = (d - 1) * pieces + 1
    assert num % den == 0
    return num // den


def normalize(ctx: PolygonCtx, x: int, y: int) -> Diagonal:
    x, y = x % ctx.N, y % ctx.N
    return (x, y) if x < y else (y, x)


def is_diagonal(ctx: PolygonCtx, x: int, y: int) -> bool:
    N = ctx.N
    if not (0 <= x < N and 0 <= y < N):
        raise ValueError(f"corner out of range for an {N}-gon")
    if x == y:
        raise ValueError("a diagonal needs two distinct corners")
    if ctx.d == 1:
        return False
    x, y = min(x, y), max(x, y)
    if y - x <= 1 or (x, y) == (0, N - 1):
        return False
    return (y - x - 1) % (ctx.d - 1) == 0


def all_diagonals(ctx: PolygonCtx) -> list[Diagonal]:
    N = ctx.N
    return [(x, y) for x in range(N) for y in range(x + 1, N) if is_diagonal(ctx, x, y)]


def crosses(D1: Diagonal, D2: Diagonal) -> bool:
    (x1, y1), (x2, y2) = D1, D2
    return x1 < x2 < y1 < y2 or x2 < x1 < y2 < y1


def _angulate(corners: tuple[int, ...], d: int) -> list[frozenset[Diagonal]]:
    """All (d+1)-angulations of the convex polygon with the given corners (cyclic order).

    The piece containing the edge ``corners[0] - corners[1]`` is fixed first by
    choosing its remaining d-1 corners; the cut-off sub-polygons recurse.
    """
    k = len(corners)
    if k == d + 1:
        return [frozenset()]
    results: list[frozenset[Diagonal]] = []

    def choose(positions: list[int]) -> None:
        last = positions[-1]
        if len(positions) == d:
            if (k - last - 1) % (d - 1) == 0:
                emit(positions)
            return
        for p in range(last + 1, k):
            if (p - last - 1) % (d - 1) == 0:
                choose(positions + [p])

    def emit(positions: list[int]) -> None:
        bounds = positions + [k]
        new_diags = []
        subs = []
        for a, b in zip(bounds, bounds[1:]):
            if b - a > 1:
                u, v = corners[a], corners[b % k]
                new_diags.append((min(u, v), max(u, v)))
                subs.append(corners[a:b] + (corners[b % k],))
        for parts in product(*(_angulate(s, d) for s in subs)):
            results.append(frozenset(new_diags).union(*parts))

    choose([1])
    return results


@lru_cache(maxsize=None)
def _enumerate(d: int, pieces: int) -> tuple[Angulation, ...]:
    ctx = PolygonCtx(d, pieces)
    if d == 1:
        return ((),)
    return tuple(sorted(tuple(sorted(A)) for A in _angulate(tuple(range(ctx.N)), d)))


def enumerate_angulations(ctx: PolygonCtx) -> list[Angulation]:
    """All (d+1)-angulations as sorted diagonal tuples, in lexicographic order."""
    return list(_enumerate(ctx.d, ctx.pieces))


def maximal_noncrossing_sets(ctx: PolygonCtx) -> list[Angulation]:
    """Maximal sets of pairwise non-crossing (d-1)-diagonals, found as maximal cliques.

    Independent of :func:`enumerate_angulations`; used to cross-check it.
    """
    diags = all_diagonals(ctx)
    idx = list(range(len(diags)))
    adj = {i: {j for j in idx if j != i and not crosses(diags[i], diags[j])} for i in idx}
    return sorted(tuple(diags[i] for i in C) for C in maximal_cliques(idx, adj))


def rotate(ctx: PolygonCtx, A: Angulation, k: int) -> Angulation:
    """Apply ``rho^k``: every corner moves ``k`` steps anticlockwise."""
    return tuple(sorted(normalize(ctx, x - k, y - k) for x, y in A))


def tau_on_angulation(ctx: PolygonCtx, A: Angulation) -> Angulation:
    """Action of the AR translate on d-cluster-tilting objects: ``rho^(d-1)``."""
    return rotate(ctx, A, ctx.d - 1)


def is_fixed(ctx: PolygonCtx, A: Angulation, k: int) -> bool:
    members = set(A)
    N = ctx.N
    for x, y in A:
        a, b = (x - k) % N, (y - k) % N
        if (min(a, b), max(a, b)) not in members:
            return False
    return True


def invariant_angulation_exists(ctx: PolygonCtx, m: int) -> tuple[bool, Optional[Angulation]]:
    """Scan every angulation for a fixed point of ``rho^m``."""
    for A in _enumerate(ctx.d, ctx.pieces):
        if is_fixed(ctx, A, m):
            return True, A
    return False, None


def criterion_invariant_exists(d: int, pieces: int, n: int) -> bool:
    """Closed form: some angulation is fixed by rho^(n(d-1)) iff N | 2n or N | tn."""
    if d < 1 or pieces < 1 or n < 1:
        raise ValueError("d, pieces and n must be positive")
    N = (d - 1) * pieces + 2
    t = gcd(d + 1, 2 * (pieces - 1))
    return (2 * n) % N == 0 or (t * n) % N == 0


def polygon_pieces(ctx: PolygonCtx, A: Angulation) -> list[frozenset[int]]:
    """Corner sets of the pieces cut out by ``A``."""
    polys: list[tuple[int, ...]] = [tuple(range(ctx.N))]
    for x, y in A:
        for k, poly in enumerate(polys):
            if x in poly and y in poly:
                i, j = sorted((poly.index(x), poly.index(y)))
                if j - i in (1, len(poly) - 1):
                    continue
                polys[k:k + 1] = [poly[i:j + 1], poly[j:] + poly[:i + 1]]
                break
        else:
            raise ValueError(f"diagonal {(x, y)} does not split any piece")
    return sorted((frozenset(p) for p in polys), key=sorted)


def _require_lemma_ctx(ctx: PolygonCtx) -> None:
    if ctx.d < 2:
        raise ValueError("the piece lemmas need d >= 2")


def centrangulation_exists(ctx: PolygonCtx, q: int, route: str = "closed") -> bool:
    """Whether some rho^(N/q)-invariant angulation has a rho^(N/q)-invariant piece.

    ``route="closed"`` evaluates ``q | gcd(l-1, d+1)``; ``route="brute"`` scans
    all angulations.
    """
    _require_lemma_ctx(ctx)
    N = ctx.N
    if q < 1 or N % q:
        raise ValueError(f"q={q} must divide N={N}")
    if route == "closed":
        return gcd(ctx.pieces - 1, ctx.d + 1) % q == 0
    if route != "brute":
        raise ValueError(f"unknown route {route!r}")
    step = N // q
    for A in _enumerate(ctx.d, ctx.pieces):
        if not is_fixed(ctx, A, step):
            continue
        for G in polygon_pieces(ctx, A):
            if frozenset((c - step) % N for c in G) == G:
                return True
    return False


def disangulation_exists(ctx: PolygonCtx, route: str = "closed") -> bool:
    """Whether some rho^(N/2)-invariant angulation contains a diagonal through the centre.

    ``route="closed"`` evaluates ``2 | l``; ``route="brute"`` scans all angulations.
    """
    _require_lemma_ctx(ctx)
    if route == "closed":
        return ctx.pieces % 2 == 0
    if route != "brute":
        raise ValueError(f"unknown route {route!r}")
    N = ctx.N
    if N % 2:
        return False
    half = N // 2
    for A in _enumerate(ctx.d, ctx.pieces):
        if any(y - x == half for x, y in A) and is_fixed(ctx, A, half):
            return True
    return False


def lcm_lemma_holds(d: int, pieces: int, n: int) -> bool:
    """``N | n r (d-1)`` iff ``N | n t`` with r = gcd(d+1, l-1), t = gcd(d+1, 2(l-1))."""
    N = (d - 1) * pieces + 2
    r = gcd(d + 1, pieces - 1)
    t = gcd(d + 1, 2 * (pieces - 1))
    return ((n * r * (d - 1)) % N == 0) == ((n * t) % N == 0)
