"""Closed-form decision of d-representation-finiteness for Lambda(n, l).

With ``N = l(d-1) + 2`` and ``t = gcd(d+1, 2(l-1))`` the algebra is
d-representation-finite exactly when ``N | 2n`` (condition A) or ``N | tn``
(condition B).  The criterion is proved for ``l >= 2``; for ``l = 1`` (semisimple) the
same arithmetic is evaluated and always succeeds through condition B, and the
record carries ``outside_hypothesis=True``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

VIA = ("condA", "condB", "both", "neither")


@dataclass(frozen=True)
class ClassRecord:
    n: int
    loewy: int
    d: int
    N: int
    t: int
    drf: bool
    via: str
    outside_hypothesis: bool = False

    def to_json(self) -> dict:
        return asdict(self)


def t_value(d: int, loewy: int) -> int:
    if d < 1:
        raise ValueError("d must be positive")
    if loewy < 2:
        raise ValueError("t is only defined for Loewy length >= 2")
    return gcd(d + 1, 2 * (loewy - 1))


def polygon_size(d: int, loewy: int) -> int:
    return loewy * (d - 1) + 2


def is_dRF_formula(n: int, loewy: int, d: int) -> ClassRecord:
    if n < 1 or loewy < 1 or d < 1:
        raise ValueError("n, loewy and d must be positive")
    N = polygon_size(d, loewy)
    t = gcd(d + 1, 2 * (loewy - 1))
    cond_a = (2 * n) % N == 0
    cond_b = (t * n) % N == 0
    via = {(True, True): "both", (True, False): "condA",
           (False, True): "condB", (False, False): "neither"}[(cond_a, cond_b)]
    return ClassRecord(n, loewy, d, N, t, cond_a or cond_b, via, outside_hypothesis=loewy < 2)


def rf_table(n_max: int, loewy_max: int, d_max: int) -> list[ClassRecord]:
    if min(n_max, loewy_max, d_max) < 1:
        raise ValueError("bounds must be positive")
    return [is_dRF_formula(n, l, d)
            for n in range(1, n_max + 1)
            for l in range(1, loewy_max + 1)
            for d in range(1, d_max + 1)]


def rf_degrees(n: int, loewy: int, d_max: int) -> list[int]:
    """All d <= d_max for which Lambda(n, loewy) is d-representation-finite."""
    return [d for d in range(1, d_max + 1) if is_dRF_formula(n, loewy, d).drf]
