"""Weyl-Heisenberg generators, the Zauner unitary, and fiducial orbits."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .framecore import DEFAULT_TOL, CVector, LineSet


class NotUnitary(ValueError):
    pass


@dataclass(frozen=True)
class Fiducial:
    vector: CVector
    source: str = "user"

    @property
    def dim(self) -> int:
        return self.vector.dim

    def __post_init__(self):
        if self.vector.is_zero():
            raise ValueError("fiducial vector must be nonzero")


def wh_generators(d: int) -> tuple[np.ndarray, np.ndarray]:
    """U = diag(1, w, ..., w^(d-1)) with w = e^(2*pi*i/d), and the cyclic
    shift V with (Vx)_j = x_(j+1 mod d)."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    omega = cmath.exp(2j * cmath.pi / d)
    u = np.diag([omega ** j for j in range(d)]).astype(complex)
    v = np.zeros((d, d), dtype=complex)
    for j in range(d):
        v[j, (j + 1) % d] = 1.0
    return u, v


def zauner_unitary(d: int) -> np.ndarray:
    """z_jk = e^(pi*i*(d-1)/12)/sqrt(d) * e^(pi*i*(2jk+(d+1)k^2)/d)."""
    if d < 2:
        raise ValueError("dimension must be >= 2")
    prefactor = cmath.exp(1j * cmath.pi * (d - 1) / 12) / math.sqrt(d)
    z = np.empty((d, d), dtype=complex)
    for j in range(d):
        for k in range(d):
            z[j, k] = prefactor * cmath.exp(
                1j * cmath.pi * (2 * j * k + (d + 1) * k * k) / d
            )
    return z


def wh_orbit(fiducial: Fiducial) -> LineSet:
    """The d^2 vectors U^j V^k x over the coset representatives of the
    center, in (j, k)-lexicographic order."""
    d = fiducial.dim
    u, v = wh_generators(d)
    x = fiducial.vector.to_array()
    vectors = []
    for j in range(d):
        uj = np.linalg.matrix_power(u, j)
        for k in range(d):
            vectors.append(
                CVector.make(uj @ np.linalg.matrix_power(v, k) @ x)
            )
    return LineSet(
        d,
        tuple(vectors),
        {"construction": "wh-orbit", "fiducial": fiducial.source},
    )


def fiducial_d4() -> Fiducial:
    """The published dimension-4 fiducial: an eigenvalue-1 eigenvector of the
    Zauner unitary, with w = e^(i*pi/4)."""
    omega = cmath.exp(1j * cmath.pi / 4)
    c1 = math.sqrt(3 - 3 / math.sqrt(5)) / (2 * math.sqrt(6))
    c2 = math.sqrt(1 + 3 / math.sqrt(5)) / (2 * math.sqrt(2))
    first = np.array([omega + 1, 1j, omega - 1, 1j], dtype=complex)
    second = np.array([0, omega, 0, -omega], dtype=complex)
    return Fiducial(CVector.make(c1 * first + c2 * second), source="builtin-d4")


def _coset_representatives(d: int) -> list[np.ndarray]:
    u, v = wh_generators(d)
    reps = []
    for j in range(d):
        uj = np.linalg.matrix_power(u, j)
        for k in range(d):
            reps.append(uj @ np.linalg.matrix_power(v, k))
    return reps


def normalizer_check(d: int, tol: float = DEFAULT_TOL) -> bool:
    """True iff conjugation by the Zauner unitary maps every coset
    representative U^j V^k to a unit phase times another representative."""
    z = zauner_unitary(d)
    zdag = z.conj().T
    reps = _coset_representatives(d)
    for w in reps:
        conj = z @ w @ zdag
        if not any(_phase_match(conj, rep, tol) for rep in reps):
            return False
    return True


def _phase_match(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    """Does a = phase * b for some unit phase?"""
    idx = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    if abs(b[idx]) < 0.5:
        return False
    phase = a[idx] / b[idx]
    if abs(abs(phase) - 1.0) > tol:
        return False
    return bool(np.max(np.abs(a - phase * b)) <= tol)


def eigenspace_eig1(matrix: np.ndarray, tol: float = 1e-8) -> list[CVector]:
    """Orthonormal basis of the eigenvalue-1 eigenspace of a unitary matrix."""
    matrix = np.asarray(matrix, dtype=complex)
    d = matrix.shape[0]
    if matrix.shape != (d, d):
        raise ValueError("matrix must be square")
    if np.max(np.abs(matrix @ matrix.conj().T - np.eye(d))) > max(tol, 1e-8):
        raise NotUnitary("matrix is not unitary within tolerance")
    eigvals, eigvecs = np.linalg.eig(matrix)
    cols = [i for i in range(d) if abs(eigvals[i] - 1.0) <= tol]
    if not cols:
        return []
    basis, _ = np.linalg.qr(eigvecs[:, cols])
    return [CVector.make(basis[:, i]) for i in range(basis.shape[1])]
