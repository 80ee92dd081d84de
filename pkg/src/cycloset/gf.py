"""Dense linear algebra over a prime field GF(p).

Matrices are numpy int64 arrays with entries reduced mod p.  Sizes here are
tiny (a morphism space unknown vector has 4*K entries, K the series
truncation), so plain Gaussian elimination is all we need.  p must be prime;
the default working field is GF(2) and the cross-check field is GF(32003),
both of which keep intermediate products well inside int64 range.
"""

from __future__ import annotations

import numpy as np

__all__ = ["rref", "rank", "nullspace", "row_space", "in_span"]


def _normalize(a: np.ndarray, p: int) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError("expected a 2-d array")
    return m


def _inv_mod(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _normalize(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * _inv_mod(m[r, c], p)) % p
        other = np.flatnonzero(m[:, c])
        for j in other:
            if j != r:
                m[j] = (m[j] - m[j, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    _, pivots = rref(a, p)
    return len(pivots)


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right null space, one solution per row."""
    m = _normalize(a, p)
    rows, cols = m.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    red, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-red[r, fc]) % p
    return basis


def row_space(a: np.ndarray, p: int) -> np.ndarray:
    """Echelonized spanning set with zero rows dropped."""
    if a.size == 0:
        return np.zeros((0, a.shape[1] if a.ndim == 2 else 0), dtype=np.int64)
    red, pivots = rref(a, p)
    return red[: len(pivots)]


def in_span(v: np.ndarray, basis: np.ndarray, p: int) -> bool:
    """Whether vector v lies in the row span of basis."""
    v = np.asarray(v, dtype=np.int64).reshape(1, -1) % p
    if basis.size == 0:
        return not v.any()
    stacked = np.vstack([basis, v])
    return rank(stacked, p) == rank(basis, p)
