"""Dense Hermitian eigendecomposition with degenerate-level grouping.

The solver is a cyclic Jacobi iteration run on the standard real-symmetric
embedding of a Hermitian matrix H = A + iB,

    M = [[A, -B], [B, A]],

whose spectrum is that of H with every eigenvalue doubled; the complex
eigenvectors are recovered from the real ones as x + i*y.  Jacobi on a
32x32 matrix is fast, has no external dependencies beyond numpy, and is
numerically bulletproof for the 16-dimensional problems handled here.  The
inner loop is numba-compiled when numba is available and falls back to the
same pure-Python code otherwise.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .errors import NotHermitian

__all__ = ["Level", "SpectralDecomposition", "eig_hermitian", "ground_state"]

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(f):
            return f

        return deco


@njit(cache=True)
def _jacobi_symmetric(m, tol_rel, max_sweeps):
    """Cyclic Jacobi for a real symmetric matrix (modified in place).

    Iterates until the off-diagonal Frobenius norm drops below
    tol_rel * ||m||_F.  Returns (diagonal, accumulated rotations V) with
    m_original = V @ diag @ V.T up to the tolerance.
    """
    n = m.shape[0]
    v = np.eye(n)
    fro2 = 0.0
    for i in range(n):
        for j in range(n):
            fro2 += m[i, j] * m[i, j]
    thresh2 = tol_rel * tol_rel * fro2
    for _ in range(max_sweeps):
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off2 += 2.0 * m[i, j] * m[i, j]
        if off2 <= thresh2:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if apq == 0.0:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + np.sqrt(1.0 + theta * theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = m[k, p]
                    akq = m[k, q]
                    m[k, p] = c * akp - s * akq
                    m[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = m[p, k]
                    aqk = m[q, k]
                    m[p, k] = c * apk - s * aqk
                    m[q, k] = s * apk + c * aqk
                m[p, q] = 0.0
                m[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    w = np.empty(n)
    for i in range(n):
        w[i] = m[i, i]
    return w, v


# compile at import so the first real call is fast; harmless if it fails
try:  # pragma: no cover
    _jacobi_symmetric(np.zeros((2, 2)), 1e-13, 1)
except Exception:  # pragma: no cover
    pass


@dataclass
class Level:
    """One (possibly degenerate) energy level."""

    energy: float
    multiplicity: int
    basis: np.ndarray  # shape (multiplicity, dim), orthonormal rows


@dataclass
class SpectralDecomposition:
    """Eigenvalues grouped into degenerate levels, energies strictly increasing."""

    levels: List[Level]

    @property
    def energies(self) -> np.ndarray:
        """All eigenvalues in ascending order, repeated by multiplicity."""
        return np.concatenate(
            [np.full(lv.multiplicity, lv.energy) for lv in self.levels]
        )

    def states(self) -> np.ndarray:
        """All basis vectors stacked, shape (dim, dim)."""
        return np.concatenate([lv.basis for lv in self.levels], axis=0)


def _check_hermitian(h: np.ndarray):
    scale = max(1.0, float(np.max(np.abs(h))) if h.size else 1.0)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise NotHermitian("matrix is not square")
    if np.max(np.abs(h - h.conj().T)) > 1e-12 * scale:
        raise NotHermitian("matrix is not Hermitian within tolerance")


def _complex_from_real_group(candidates: np.ndarray, m: int) -> np.ndarray:
    """Extract m orthonormal complex vectors from 2m real-embedding vectors.

    Each real vector u maps to u[:dim] + i*u[dim:]; the images span the
    m-dimensional complex eigenspace twice over (v and i*v), so a modified
    Gram-Schmidt with a residual threshold keeps exactly one copy of each
    direction.
    """
    dim = candidates.shape[1] // 2
    kept = []
    for u in candidates:
        v = u[:dim] + 1j * u[dim:]
        for w in kept:
            v = v - np.vdot(w, v) * w
        nrm = np.linalg.norm(v)
        if nrm > 0.3:
            v = v / nrm
            # second orthogonalization pass for clean orthonormality
            for w in kept:
                v = v - np.vdot(w, v) * w
            v = v / np.linalg.norm(v)
            kept.append(v)
        if len(kept) == m:
            break
    if len(kept) != m:  # pragma: no cover - defensive
        raise RuntimeError("failed to extract complex eigenbasis from real embedding")
    return np.array(kept)


def eig_hermitian(
    h, degeneracy_tol: Optional[float] = None
) -> SpectralDecomposition:
    """Full spectral decomposition of a Hermitian matrix.

    Eigenvalues closer than ``degeneracy_tol`` (default
    ``1e-8 * max(1, max|eigenvalue|)``) are grouped into one level whose
    basis is orthonormalized in solver order.  The gauge inside a
    degenerate level is arbitrary; downstream code must not depend on it.
    """
    h = np.asarray(h, dtype=complex)
    _check_hermitian(h)
    dim = h.shape[0]
    m = np.block([[h.real, -h.imag], [h.imag, h.real]])
    w, v = _jacobi_symmetric(np.ascontiguousarray(m), 1e-13, 60)
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    if degeneracy_tol is None:
        scale = max(1.0, float(np.max(np.abs(w))) if w.size else 1.0)
        degeneracy_tol = 1e-8 * scale

    levels: List[Level] = []
    start = 0
    for i in range(1, 2 * dim + 1):
        if i == 2 * dim or w[i] - w[i - 1] > degeneracy_tol:
            group = slice(start, i)
            size = i - start
            if size % 2 != 0:  # pragma: no cover - defensive
                raise RuntimeError("real-embedding eigenvalue group has odd size")
            basis = _complex_from_real_group(v[:, group].T.copy(), size // 2)
            levels.append(
                Level(
                    energy=float(np.mean(w[group])),
                    multiplicity=size // 2,
                    basis=basis,
                )
            )
            start = i
    return SpectralDecomposition(levels=levels)


def ground_state(h):
    """Lowest level: (energy, one representative eigenvector, multiplicity)."""
    lowest = eig_hermitian(h).levels[0]
    return lowest.energy, lowest.basis[0], lowest.multiplicity
