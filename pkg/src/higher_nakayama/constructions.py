"""Parameter arithmetic for trivial extensions, fractionally Calabi-Yau algebras,
homogeneous algebras and higher preprojective algebras.

Only the numeric shadows are computed here: orbit-algebra indices ``n`` and the
number of indecomposable summands of the resulting basic cluster-tilting
modules.  When a construction lands in the self-injective Nakayama class the
report carries the classifier's verdict.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Optional

from .classifier import ClassRecord, is_dRF_formula
from .nakayama import NakAlgebra

TUBULAR_WEIGHTS = {
    (2, 2, 2, 2): 2,
    (3, 3, 3): 3,
    (2, 4, 4): 4,
    (2, 3, 6): 6,
}


@dataclass(frozen=True)
class FracCYParams:
    a: int
    b: int
    d: int
    ell: int
    g: int
    n_trivext: int
    orbit_reps: int

    def summand_count(self, p: int) -> int:
        """Summands of the basic d-CT module of T_n(Lambda) when Lambda has p projectives."""
        return p * self.n_trivext + p * self.orbit_reps


@dataclass
class ConstructionReport:
    kind: str
    params: dict
    nakayama: Optional[NakAlgebra] = None
    summands: Optional[int] = None
    verdict: Optional[ClassRecord] = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "params": self.params}
        if self.nakayama is not None:
            out["nakayama"] = self.nakayama.to_json()
        if self.summands is not None:
            out["summands"] = self.summands
        if self.verdict is not None:
            out["verdict"] = self.verdict.to_json()
        out.update(self.extra)
        return out


def fraccy_params(a: int, b: int, d: int, ell: int) -> FracCYParams:
    """Orbit index n = ell(ad - b)/g, g = gcd(d+1, a+b), for a twisted b/a-CY algebra."""
    if min(a, b, d, ell) < 1:
        raise ValueError("a, b, d and ell must be positive")
    if a * d <= b:
        raise ValueError(f"need a*d > b (got a={a}, b={b}, d={d}); b - da must be negative")
    g = gcd(d + 1, a + b)
    assert (a * d - b) % g == 0
    return FracCYParams(a, b, d, ell, g, ell * (a * d - b) // g, ell * (a + b) // g)


def tubular_n(kind: tuple[int, ...], d: int) -> int:
    """n = p(d-1)/gcd(2p, d+1) for the canonical tubular algebra of the given weight type."""
    if d < 2:
        raise ValueError("d must be at least 2")
    p = TUBULAR_WEIGHTS[tuple(kind)]
    return p * (d - 1) // gcd(2 * p, d + 1)


def trivext_count(p: int, m: int, d: int, ell: int) -> int:
    """Summands of the basic d-CT module of T_{d ell}(Lambda).

    ``p`` counts indecomposable projectives of Lambda, ``m`` the summands of its
    unique basic d-CT module.
    """
    if p < 1 or d < 1 or ell < 1:
        raise ValueError("p, d and ell must be positive")
    if m < p:
        raise ValueError("the d-CT module contains every projective, so m >= p")
    return p * d * ell + ell * (d + 1) * (m - p) + ell * p


def trivrf_count(r: int, p: int) -> int:
    """Summands of T_{r-1}(Lambda) + Lambda for an r-homogeneous Lambda with p projectives."""
    if r < 2 or p < 1:
        raise ValueError("need r >= 2 and p >= 1")
    return p * (r - 1) + p


def preproj_nakayama(n: int) -> ConstructionReport:
    """The 3-preprojective algebra of k A_n / rad^(n-1), i.e. Lambda(n, n-1), and its 3-RF verdict."""
    if n < 3:
        raise ValueError("need n >= 3")
    A = NakAlgebra(n, n - 1)
    verdict = is_dRF_formula(n, n - 1, 3)
    return ConstructionReport("preproj", {"n": n}, nakayama=A, verdict=verdict)


def wild_family_n(m: int, d: int, ell: int) -> int:
    """n = ell((d+1)(m+1) - (3m-1)) / gcd(d+1, 3m-1) for Lambda_m = (k A_m)^{(x)2}."""
    if m < 2 or d < 2 or ell < 1:
        raise ValueError("need m >= 2, d >= 2, ell >= 1")
    g = gcd(d + 1, 3 * m - 1)
    num = (d + 1) * (m + 1) - (3 * m - 1)
    assert num % g == 0
    return ell * num // g


def homogeneous_tensor(r: int, degrees: list[int]) -> tuple[int, int]:
    """(r, sum of degrees) for a tensor product of r-homogeneous d_i-RF algebras."""
    if r < 1 or not degrees or min(degrees) < 1:
        raise ValueError("need r >= 1 and a nonempty list of positive degrees")
    return r, sum(degrees)


def homogeneous_trivext_reps(r: int, d: int, ell: int) -> int:
    if min(r, d, ell) < 1:
        raise ValueError("r, d and ell must be positive")
    return ell * (d * r - d + r)


def cross_section_size(a: int, count_f0: int, b: int, count_g0: int) -> int:
    """Size of the cross-section for f^a g^b-orbits built from a copies of I(f,0) and b of I(g,0)."""
    if a < 1 or b < 1 or count_f0 < 0 or count_g0 < 0:
        raise ValueError("need a, b >= 1 and nonnegative counts")
    return a * count_f0 + b * count_g0


def cross_section_set(u: int, v: int, a: int, b: int, window: int) -> set[int]:
    """The set I(f,0..a-1) + I(g,-b..-1) for f = +u, g = +v on the integers, I_+ = positives.

    Membership in f^i(I_+) is decided by pulling back along f^i, so only points
    in ``[-window, window]`` are ever inspected.
    """
    def in_image(x: int, step: int, i: int) -> bool:  # x in shift^i(I_+)
        return x - i * step > 0

    pts = range(-window, window + 1)
    out: set[int] = set()
    for i in range(a):
        out |= {x for x in pts if in_image(x, u, i) and not in_image(x, u, i + 1)}
    for i in range(-b, 0):
        out |= {x for x in pts if in_image(x, v, i) and not in_image(x, v, i + 1)}
    return out


def cross_section_verify(u: int, v: int, a: int, b: int, window: int) -> bool:
    """Check that the cross-section meets every f^a g^b-orbit inside the window exactly once."""
    if min(u, v, a, b) < 1:
        raise ValueError("u, v, a, b must be positive")
    period = a * u + b * v
    if window < 3 * period:
        raise ValueError(f"window must be at least {3 * period}")
    S = cross_section_set(u, v, a, b, window)
    if len(S) != cross_section_size(a, u, b, v):
        return False
    for x in range(-window, window + 1):
        orbit = range(x % period - (window // period + 1) * period, window + 1, period)
        hits = [y for y in orbit if y in S]
        if len(hits) != 1:
            return False
    return True
