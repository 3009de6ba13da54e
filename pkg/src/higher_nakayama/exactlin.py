"""Exact dense linear algebra over the rationals.

Matrices are numpy arrays of ``dtype=object`` holding :class:`fractions.Fraction`
entries, so numpy handles shape bookkeeping, slicing and ``@`` while every
arithmetic operation stays exact.  Nothing here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

Rat = Fraction
Mat = np.ndarray

__all__ = [
    "Rat",
    "Mat",
    "mat",
    "zeros",
    "identity",
    "column",
    "rref",
    "rank",
    "rank_kernel",
    "solve",
    "block_diag",
    "rat_to_str",
    "rat_from_str",
    "mat_to_json",
    "mat_from_json",
    "is_zero",
]


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed in exact matrices")
    return Fraction(x)


def mat(rows: Iterable[Iterable] | np.ndarray, shape: Optional[tuple[int, int]] = None) -> Mat:
    """Build an exact matrix from nested rows (ints, Fractions or "p/q" strings).

    ``shape`` is only needed to disambiguate empty input, e.g. ``mat([], (0, 3))``.
    """
    if isinstance(rows, np.ndarray) and rows.dtype == object and rows.ndim == 2:
        out = np.empty(rows.shape, dtype=object)
        for idx, x in np.ndenumerate(rows):
            out[idx] = _rat(x)
        return out
    rows = [list(r) for r in rows]
    if not rows:
        r, c = shape if shape is not None else (0, 0)
        if r != 0:
            raise ValueError("empty row list but shape has rows")
        return np.empty((0, c), dtype=object)
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix rows")
    if shape is not None and shape != (len(rows), ncols):
        raise ValueError(f"shape {shape} does not match data {(len(rows), ncols)}")
    out = np.empty((len(rows), ncols), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = _rat(x)
    return out


def zeros(rows: int, cols: int) -> Mat:
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> Mat:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def column(values: Sequence) -> Mat:
    """A column vector (shape ``(k, 1)``) from a flat sequence."""
    return mat([[v] for v in values], shape=(len(values), 1))


def is_zero(A: Mat) -> bool:
    return all(x == 0 for x in A.flat)


def block_diag(blocks: Sequence[Mat]) -> Mat:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def rref(A: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the list of pivot columns.

    Pivots are chosen left to right, the first nonzero entry in each column
    (no magnitude pivoting needed in exact arithmetic).
    """
    R = mat(A) if A.dtype != object else A.copy()
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if R[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        p = R[r, c]
        if p != 1:
            R[r, c:] = [x / p for x in R[r, c:]]
        for i in range(nrows):
            if i != r and R[i, c] != 0:
                f = R[i, c]
                R[i, c:] = [x - f * y for x, y in zip(R[i, c:], R[r, c:])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: Mat) -> int:
    if A.size == 0:
        return 0
    return len(rref(A)[1])


def rank_kernel(A: Mat) -> tuple[int, list[Mat]]:
    """Rank of ``A`` and a basis of its right kernel.

    Kernel vectors are returned as ``(cols, 1)`` columns, one per free column in
    increasing order; each has a 1 in its own free coordinate and 0 in the other
    free coordinates, so the basis is canonical for the row space of ``A``.
    """
    nrows, ncols = A.shape
    if nrows == 0 or ncols == 0:
        basis = []
        for f in range(ncols):
            v = zeros(ncols, 1)
            v[f, 0] = Fraction(1)
            basis.append(v)
        return 0, basis
    R, pivots = rref(A)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = zeros(ncols, 1)
        v[f, 0] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc, 0] = -R[row, f]
        basis.append(v)
    return len(pivots), basis


def solve(A: Mat, b: Mat | Sequence) -> Optional[Mat]:
    """Particular solution of ``A x = b`` with all free variables set to zero.

    Returns ``None`` when ``b`` is outside the column span of ``A``.
    """
    b = b if isinstance(b, np.ndarray) else column(b)
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    nrows, ncols = A.shape
    if b.shape != (nrows, 1):
        raise ValueError(f"right-hand side has shape {b.shape}, expected ({nrows}, 1)")
    if nrows == 0:
        return zeros(ncols, 1)
    aug = np.concatenate([A, b], axis=1)
    R, pivots = rref(aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = zeros(ncols, 1)
    for row, pc in enumerate(pivots):
        x[pc, 0] = R[row, ncols]
    return x


def rat_to_str(x: Fraction) -> str:
    x = _rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str | int) -> Fraction:
    return _rat(s)


def mat_to_json(A: Mat) -> list[list[str]]:
    return [[rat_to_str(x) for x in row] for row in A]


def mat_from_json(rows: list, shape: Optional[tuple[int, int]] = None) -> Mat:
    return mat(rows, shape=shape)
