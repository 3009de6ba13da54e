"""Three routes to the same verdict.

For each (n, l, d) the closed-form criterion, the module-category search and
the search for rho^{n(d-1)}-invariant angulations are compared.
"""
from higher_nakayama import classifier, cluster, polygon
from higher_nakayama.polygon import PolygonCtx

print(" n  l  d    N  t  formula brute polygon  via")
for n in range(1, 5):
    for loewy in range(2, 4):
        for d in range(1, 5):
            r = classifier.is_dRF_formula(n, loewy, d)
            brute, _ = cluster.is_dRF_bruteforce(n, loewy, d)
            poly, _ = polygon.invariant_angulation_exists(PolygonCtx(d, loewy), n * (d - 1))
            assert r.drf == brute == poly
            print(f"{n:2} {loewy:2} {d:2} {r.N:4} {r.t:2}  {r.drf!s:>7} {brute!s:>5} "
                  f"{poly!s:>7}  {r.via}")

print("degrees d <= 12 for which Lambda(6,3) is d-RF:", classifier.rf_degrees(6, 3, 12))
