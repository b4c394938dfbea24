"""Matrix families: Jacobi matrices, discrete Schrodinger matrices, and their
boundary-condition and Floquet (corner-coupled) variants.

All types are immutable value objects storing only the defining data
(off-diagonal, diagonal, corner angle); dense matrices are materialized
explicitly via ``to_dense``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

Scalar = Union[int, float, Fraction]


def _check_finite(name: str, values) -> None:
    for v in values:
        if isinstance(v, float) and not math.isfinite(v):
            raise ValueError(f"{name} entries must be finite, got {v!r}")


def _as_sequence(x, n: int):
    """Accept a length-n sequence or a single number broadcast to length n."""
    if isinstance(x, (int, float, Fraction)):
        return (x,) * n
    t = tuple(x)
    if len(t) != n:
        raise ValueError(f"expected {n} entries, got {len(t)}")
    return t


@dataclass(frozen=True)
class JacobiMatrix:
    """Real symmetric tridiagonal matrix with strictly positive off-diagonal.

    ``a`` holds the n-1 off-diagonal entries, ``b`` the n diagonal entries.
    Entries may be ints/Fractions (exact mode downstream) or floats.
    """

    n: int
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if len(self.b) != self.n:
            raise ValueError(f"diagonal length {len(self.b)} != n = {self.n}")
        if len(self.a) != self.n - 1:
            raise ValueError(f"off-diagonal length {len(self.a)} != n-1 = {self.n - 1}")
        _check_finite("diagonal", self.b)
        _check_finite("off-diagonal", self.a)
        for ak in self.a:
            if not ak > 0:
                raise ValueError(f"off-diagonal entries must be > 0, got {ak!r}")

    def to_dense(self, dtype=float) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=dtype)
        for i, bi in enumerate(self.b):
            m[i, i] = bi
        for i, ai in enumerate(self.a):
            m[i, i + 1] = ai
            m[i + 1, i] = ai
        return m

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "a": [_num_json(x) for x in self.a],
            "b": [_num_json(x) for x in self.b],
            "boundary": None,
            "theta": None,
        }


@dataclass(frozen=True)
class BoundaryPerturbation:
    """Additive perturbation (b at entry 1, B at entry n) of the diagonal.

    Encodes the difference-equation boundary conditions f_0 = b f_1 and
    f_{n+1} = B f_n.
    """

    b: Scalar
    B: Scalar

    def __post_init__(self):
        _check_finite("boundary", (self.b, self.B))


@dataclass(frozen=True)
class FloquetMatrix:
    """Discrete Schrodinger matrix (a = 1) with corner coupling e^{±2πiθ}.

    theta is an angle in full turns, canonicalized into [0, 1). The
    represented matrix is Hermitian: the (1, n) entry is e^{2πiθ} and the
    (n, 1) entry its conjugate. Requires n >= 3 so the corners do not
    collide with the tridiagonal band.
    """

    n: int
    b: tuple
    theta: float

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("Floquet coupling requires n >= 3")
        object.__setattr__(self, "b", _as_sequence(self.b, self.n))
        _check_finite("diagonal", self.b)
        _check_finite("theta", (self.theta,))
        object.__setattr__(self, "theta", float(self.theta) % 1.0)

    def schrodinger_part(self) -> JacobiMatrix:
        """The underlying tridiagonal matrix with the corners removed."""
        return JacobiMatrix(self.n, (1,) * (self.n - 1), self.b)

    def corner_phase(self) -> complex:
        return complex(np.exp(2j * np.pi * self.theta))

    def to_dense(self) -> np.ndarray:
        m = self.schrodinger_part().to_dense(dtype=complex)
        z = self.corner_phase()
        m[0, self.n - 1] = z
        m[self.n - 1, 0] = z.conjugate()
        return m

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "a": [1] * (self.n - 1),
            "b": [_num_json(x) for x in self.b],
            "boundary": None,
            "theta": self.theta,
        }


def _num_json(x):
    return str(x) if isinstance(x, Fraction) else x


def make_schrodinger(n: int, b) -> JacobiMatrix:
    """Discrete Schrodinger matrix: all off-diagonal entries 1, diagonal b.

    ``b`` may be a sequence of length n or a single number broadcast.
    """
    b = _as_sequence(b, n)
    return JacobiMatrix(n, (1,) * (n - 1), b)


def make_free(n: int) -> JacobiMatrix:
    """Free discrete Schrodinger matrix: unit off-diagonal, zero diagonal."""
    return make_schrodinger(n, (0,) * n)


def apply_boundary(m: JacobiMatrix, p: BoundaryPerturbation) -> JacobiMatrix:
    """Add p.b to the first diagonal entry and p.B to the last.

    For n = 1 both perturbations land on the single entry.
    """
    b = list(m.b)
    b[0] = b[0] + p.b
    b[-1] = b[-1] + p.B
    return JacobiMatrix(m.n, m.a, b)


def make_floquet(n: int, b, theta: float) -> FloquetMatrix:
    """Schrodinger matrix with corner coupling at angle theta (in turns)."""
    return FloquetMatrix(n, b, theta)
