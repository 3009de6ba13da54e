"""Cross-validation suites.

Each suite runs one family of exhaustive checks and stops at the first
counterexample.  Cells of a suite are independent, so they can be spread over
worker processes; results are merged in input order, which keeps the report
identical for any worker count.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional

from . import bqa, classifier, cluster, constructions, nakayama, polygon

SUITES = ("engine", "bruteforce", "polygon", "points", "constructions")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    counterexample: Optional[dict] = None
    seconds: float = 0.0


@dataclass
class VerifyReport:
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_json(self) -> dict:
        return {"passed": self.passed, "suites": [asdict(s) for s in self.suites]}


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _first_failure(cells: Iterable[tuple[int, Optional[dict]]]) -> tuple[int, Optional[dict]]:
    total = 0
    for count, bad in cells:
        total += count
        if bad is not None:
            return total, bad
    return total, None


# -- engine ------------------------------------------------------------------


def _ar_translate_from_engine(A: nakayama.NakAlgebra, M: nakayama.NakModule,
                              mods: list[nakayama.NakModule]) -> list[nakayama.NakModule]:
    """Indecomposables Z with Ext^1(M, N) = stable Hom(N, Z) for every N."""
    rep = lambda X: nakayama.to_representation(A, X)
    ext1 = {N: bqa.ext_dim(rep(M), rep(N), 1) for N in mods}
    nonproj = [Z for Z in mods if not nakayama.is_projective(A, Z)]
    return [Z for Z in nonproj
            if all(bqa.stable_hom_dim(rep(N), rep(Z)) == ext1[N] for N in mods)]


def engine_cell(args: tuple[int, int, int]) -> tuple[int, Optional[dict]]:
    n, loewy, max_i = args
    A = nakayama.NakAlgebra(n, loewy)
    E = A.engine()
    mods = nakayama.indecomposables(A)
    rep = {M: nakayama.to_representation(A, M) for M in mods}
    checks = 0

    def bad(**kw):
        return checks, {"n": n, "loewy": loewy, **kw}

    for M in mods:
        checks += 1
        if not rep[M].satisfies_relations():
            return bad(check="relations", module=str(M))
        got = nakayama.identify(A, bqa.syzygy(rep[M]))
        if got != nakayama.omega(A, M):
            return bad(check="omega", module=str(M), engine=str(got))
    # Nakayama permutation read off the engine's injectives: I_a has top S_sigma(a)
    sigma = []
    for a in range(n):
        checks += 1
        P = nakayama.NakModule(a, loewy)
        got = nakayama.identify(A, bqa.injective(E, a))
        if got != nakayama.nu(A, P):
            return bad(check="nu-projective", module=str(P), engine=str(got))
        sigma.append(got.top)
    if loewy > 1 and any(sigma[(i + 1) % n] != (sigma[i] + 1) % n for i in range(n)):
        return bad(check="nakayama-permutation", sigma=sigma)

    def twist(X: bqa.Representation) -> bqa.Representation:
        dims = [0] * n
        for v in range(n):
            dims[sigma[v]] = X.dims[v]
        maps = {nakayama.arrow_name(sigma[i]): X.maps[nakayama.arrow_name(i)]
                for i in range(n)} if loewy > 1 else {}
        return bqa.Representation(E, tuple(dims), maps)

    for M in mods:
        checks += 1
        got = nakayama.identify(A, twist(rep[M]))
        if got != nakayama.nu(A, M):
            return bad(check="nu", module=str(M), engine=str(got))
        if nakayama.is_projective(A, M):
            continue
        checks += 1
        got = nakayama.identify(A, twist(bqa.syzygy(bqa.syzygy(rep[M]))))
        tM = nakayama.tau(A, M)
        if got != tM:
            return bad(check="tau", module=str(M), engine=str(got))
        if tM not in _ar_translate_from_engine(A, M, mods):
            return bad(check="ar-formula", module=str(M))
        if bqa.ext_dim(rep[M], rep[tM], 1) < 1:
            return bad(check="ar-ext", module=str(M))
    for X in mods:
        for Y in mods:
            for i in range(1, max_i + 1):
                checks += 1
                e1 = bqa.ext_dim(rep[X], rep[Y], i)
                e2 = nakayama.ext_dim_nak(A, X, Y, i)
                if e1 != e2:
                    return bad(check="ext", x=str(X), y=str(Y), i=i, resolution=e1, stable=e2)
    return checks, None


def suite_engine(n_max: int = 4, loewy_max: int = 4, max_i: int = 4, jobs: int = 1):
    cells = [(n, l, max_i) for n in range(1, n_max + 1) for l in range(1, loewy_max + 1)]
    return _first_failure(_pmap(engine_cell, cells, jobs))


# -- brute force vs formula -------------------------------------------------


def bruteforce_cell(args: tuple[int, int, int]) -> tuple[int, Optional[dict]]:
    n, loewy, d_max = args
    checks = 0
    for d in range(1, d_max + 1):
        checks += 1
        brute, _ = cluster.is_dRF_bruteforce(n, loewy, d)
        formula = classifier.is_dRF_formula(n, loewy, d).drf
        if brute != formula:
            return checks, {"n": n, "loewy": loewy, "d": d, "bruteforce": brute, "formula": formula}
    return checks, None


def suite_bruteforce(n_max: int = 6, loewy_min: int = 2, loewy_max: int = 4, d_max: int = 5,
                     jobs: int = 1):
    cells = [(n, l, d_max) for n in range(1, n_max + 1) for l in range(loewy_min, loewy_max + 1)]
    return _first_failure(_pmap(bruteforce_cell, cells, jobs))


# -- polygon -------------------------------------------------------------------


def polygon_contexts(N_max: int, include_d1: bool = True) -> list[polygon.PolygonCtx]:
    out = []
    if include_d1:
        out += [polygon.PolygonCtx(1, l) for l in range(1, 5)]
    for d in range(2, N_max):
        for l in range(1, N_max):
            if (d - 1) * l + 2 <= N_max:
                out.append(polygon.PolygonCtx(d, l))
    return out


def invariance_cell(args: tuple[int, int, int]) -> tuple[int, Optional[dict]]:
    d, l, n_max = args
    ctx = polygon.PolygonCtx(d, l)
    for n in range(1, n_max + 1):
        brute, _ = polygon.invariant_angulation_exists(ctx, n * (d - 1))
        closed = polygon.criterion_invariant_exists(d, l, n)
        if brute != closed:
            return n, {"check": "invariant", "d": d, "pieces": l, "n": n,
                       "bruteforce": brute, "criterion": closed}
    return n_max, None


def structure_cell(args: tuple[int, int, int, int]) -> tuple[int, Optional[dict]]:
    d, l, count_max, maximal_max = args
    ctx = polygon.PolygonCtx(d, l)
    N = ctx.N
    checks = 0
    angs = polygon.enumerate_angulations(ctx)
    if N <= count_max:
        checks += 1
        if len(angs) != polygon.fuss_catalan(d, l) or len(set(angs)) != len(angs):
            return checks, {"check": "fuss-catalan", "d": d, "pieces": l, "count": len(angs)}
    if d >= 2 and N <= maximal_max:
        checks += 1
        maximal = polygon.maximal_noncrossing_sets(ctx)
        if any(len(m) != l - 1 for m in maximal) or maximal != angs:
            return checks, {"check": "maximal-size", "d": d, "pieces": l}
        angset = set(angs)
        for A in angs:
            checks += 1
            if polygon.rotate(ctx, A, N) != A or polygon.rotate(ctx, A, 1) not in angset:
                return checks, {"check": "rotation", "d": d, "pieces": l, "angulation": A}
    if d >= 2 and N <= maximal_max:
        for q in range(1, N + 1):
            if N % q:
                continue
            checks += 1
            b = polygon.centrangulation_exists(ctx, q, route="brute")
            c = polygon.centrangulation_exists(ctx, q, route="closed")
            if b != c:
                return checks, {"check": "centrangulation", "d": d, "pieces": l, "q": q,
                                "bruteforce": b, "closed": c}
        checks += 1
        b = polygon.disangulation_exists(ctx, route="brute")
        c = polygon.disangulation_exists(ctx, route="closed")
        if b != c:
            return checks, {"check": "disangulation", "d": d, "pieces": l,
                            "bruteforce": b, "closed": c}
    return checks, None


def suite_polygon(N_max: int = 14, n_max: int = 12, count_max: int = 14, maximal_max: int = 12,
                  lemma_d: int = 8, lemma_l: int = 8, lemma_n: int = 40, jobs: int = 1):
    ctxs = polygon_contexts(max(N_max, count_max))
    inv = [(c.d, c.pieces, n_max) for c in ctxs if c.N <= N_max]
    struct = [(c.d, c.pieces, count_max, maximal_max) for c in ctxs]
    results = _pmap(invariance_cell, inv, jobs) + _pmap(structure_cell, struct, jobs)
    checks = 0
    for d in range(2, lemma_d + 1):
        for l in range(1, lemma_l + 1):
            for n in range(1, lemma_n + 1):
                checks += 1
                if not polygon.lcm_lemma_holds(d, l, n):
                    results.append((checks, {"check": "lcm-lemma", "d": d, "pieces": l, "n": n}))
                    return _first_failure(results)
    results.append((checks, None))
    return _first_failure(results)


# -- known point values ------------------------------------------------------


def suite_points(jobs: int = 1):
    checks = 0
    expected = [((2, 2, 2), True), ((1, 2, 2), False)]
    expected += [((n, n - 1, 3), True) for n in range(3, 7)]
    for (n, l, d), want in expected:
        checks += 1
        f = classifier.is_dRF_formula(n, l, d).drf
        b, _ = cluster.is_dRF_bruteforce(n, l, d)
        if f != want or b != want:
            return checks, {"n": n, "loewy": l, "d": d, "expected": want,
                            "formula": f, "bruteforce": b}
    for d, ell in [(2, 1), (2, 2), (3, 1), (4, 1)]:
        checks += 1
        n = d * ell
        f = classifier.is_dRF_formula(n, 2, d).drf
        b, witness = cluster.is_dRF_bruteforce(n, 2, d)
        size = constructions.trivext_count(1, 1, d, ell)
        if not (f and b) or witness is None or len(witness) != size or size != (d + 1) * ell:
            return checks, {"n": n, "loewy": 2, "d": d, "formula": f, "bruteforce": b,
                            "witness_size": None if witness is None else len(witness),
                            "expected_size": (d + 1) * ell}
    return checks, None


# -- constructions -----------------------------------------------------------

TUBULAR_EXPECTED = {
    ((3, 3, 3), 2): 1, ((2, 2, 2, 2), 3): 1, ((2, 3, 6), 2): 2, ((2, 4, 4), 3): 2,
}


def suite_constructions(jobs: int = 1):
    checks = 0
    for (kind, d), want in TUBULAR_EXPECTED.items():
        checks += 1
        if constructions.tubular_n(kind, d) != want:
            return checks, {"check": "tubular", "type": kind, "d": d}
    for kind, p in constructions.TUBULAR_WEIGHTS.items():
        for d in range(2, 13):
            checks += 1
            if constructions.tubular_n(kind, d) != constructions.fraccy_params(p, p, d, 1).n_trivext:
                return checks, {"check": "tubular-fraccy", "type": kind, "d": d}
    for m in range(2, 11):
        for ell in range(1, 6):
            checks += 1
            if (constructions.wild_family_n(m, 2, ell) != 4 * ell
                    or constructions.wild_family_n(m, 3 * m - 2, ell) != m * ell):
                return checks, {"check": "wild", "m": m, "ell": ell}
    for n in range(3, 51):
        checks += 1
        if not constructions.preproj_nakayama(n).verdict.drf:
            return checks, {"check": "preproj", "n": n}
    for d in range(1, 9):
        for ell in range(1, 9):
            checks += 1
            if (constructions.trivext_count(1, 1, d, ell) != (d + 1) * ell
                    or not classifier.is_dRF_formula(d * ell, 2, d).drf):
                return checks, {"check": "trivext", "d": d, "ell": ell}
    return checks, None


def run(suites: Iterable[str] = SUITES, jobs: int = 1, **limits) -> VerifyReport:
    """Run the named suites; ``limits`` are forwarded to the matching suite functions."""
    table = {
        "engine": (suite_engine, ("n_max", "loewy_max", "max_i")),
        "bruteforce": (suite_bruteforce, ("n_max", "loewy_max", "d_max")),
        "polygon": (suite_polygon, ("N_max", "n_max")),
        "points": (suite_points, ()),
        "constructions": (suite_constructions, ()),
    }
    report = VerifyReport()
    for name in suites:
        fn, keys = table[name]
        kwargs = {k: limits[k] for k in keys if limits.get(k) is not None}
        t0 = time.perf_counter()
        checks, bad = fn(jobs=jobs, **kwargs)
        report.suites.append(SuiteResult(name, bad is None, checks, bad,
                                         round(time.perf_counter() - t0, 3)))
    return report
