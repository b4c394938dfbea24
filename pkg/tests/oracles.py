"""Independent brute-force oracles used by the tests.

These deliberately avoid the three-term recurrence and the Sturm counting
used by the package: determinants are expanded cofactor-style over
polynomial entries, eigenvalues come from numpy's dense solvers, and the
free-matrix spectrum has its own closed form.
"""

from __future__ import annotations

import math

import numpy as np

from jacspec import Poly


def char_matrix(dense) -> list[list[Poly]]:
    """Entries of (xI - M) as polynomials, for a dense matrix M."""
    n = len(dense)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            mij = dense[i][j]
            if i == j:
                row.append(Poly((-mij, 1)))
            elif mij == 0:
                row.append(Poly.zero())
            else:
                row.append(Poly((-mij,)))
        rows.append(row)
    return rows


def poly_det(rows: list[list[Poly]]) -> Poly:
    """Determinant by first-row cofactor expansion, skipping zero entries.

    Exponential in the worst case but fine at the sizes used here; knows
    nothing about tridiagonal structure.
    """
    n = len(rows)
    if n == 0:
        return Poly.one()
    if n == 1:
        return rows[0][0]
    total = Poly.zero()
    for j, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = entry * poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def brute_charpoly(dense) -> Poly:
    """det(xI - M) via cofactor expansion over polynomial entries."""
    return poly_det(char_matrix(dense))


def free_closed_form(n: int) -> list[float]:
    """Ascending eigenvalues of the free matrix: 2cos(k*pi/(n+1))."""
    return sorted(2.0 * math.cos(k * math.pi / (n + 1)) for k in range(1, n + 1))


def dense_eigs(m) -> np.ndarray:
    """Eigenvalues via numpy's dense Hermitian solver."""
    dense = m.to_dense()
    return np.linalg.eigvalsh(dense)
