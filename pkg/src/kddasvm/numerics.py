"""Dense matrix helpers and the symmetric eigensolver.

Matrices are plain 2-D float64 numpy arrays. ``as_matrix`` is the single
validation point; everything downstream assumes its output.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrix

DEFAULT_EIG_TOL = 1e-10
SYMMETRY_RTOL = 1e-10


def as_matrix(a, name="matrix"):
    """Return ``a`` as a finite 2-D float64 array, or raise InvalidMatrix."""
    try:
        m = np.array(a, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidMatrix(f"{name}: not convertible to a real matrix") from exc
    if m.ndim != 2:
        raise InvalidMatrix(f"{name}: expected 2 dimensions, got {m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise InvalidMatrix(f"{name}: empty shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix(f"{name}: contains NaN or Inf")
    return m


def matmul(a, b):
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise InvalidMatrix(f"dimension mismatch: {a.shape} @ {b.shape}")
    out = a @ b
    if not np.all(np.isfinite(out)):
        raise InvalidMatrix("product overflowed to a non-finite value")
    return out


def symmetrize(a):
    return 0.5 * (a + a.T)


def _check_symmetric(a):
    if a.shape[0] != a.shape[1]:
        raise InvalidMatrix(f"expected a square matrix, got {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a))))
    asym = float(np.max(np.abs(a - a.T)))
    if asym > SYMMETRY_RTOL * scale:
        raise InvalidMatrix(f"matrix is not symmetric (max |A - A^T| = {asym:.3e})")


def _fix_signs(vectors):
    # first non-negligible component of every column made positive
    out = vectors.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        cutoff = 1e-10 * np.max(np.abs(col))
        idx = np.flatnonzero(np.abs(col) > cutoff)
        if idx.size and col[idx[0]] < 0:
            out[:, j] = -col
    return out


@dataclass(frozen=True)
class EigenResult:
    """Full spectrum of a symmetric matrix.

    ``values`` are sorted in descending order and ``vectors[:, j]`` is the
    unit eigenvector for ``values[j]``. Eigenvalues whose magnitude falls
    below ``tol * max|values|`` are kept but flagged by ``near_zero``.
    """

    values: np.ndarray
    vectors: np.ndarray
    tol: float = DEFAULT_EIG_TOL

    @property
    def near_zero(self):
        scale = float(np.max(np.abs(self.values))) if self.values.size else 0.0
        return np.abs(self.values) <= self.tol * scale

    @property
    def rank(self):
        return int(np.count_nonzero(~self.near_zero))


def sym_eig(a, tol=DEFAULT_EIG_TOL):
    """Eigendecomposition of a real symmetric matrix.

    Backed by LAPACK's symmetric driver (tridiagonal reduction followed by
    divide and conquer). The exact asymmetric part is discarded after the
    symmetry check so round-off does not leak into the spectrum.
    """
    a = as_matrix(a, "a")
    _check_symmetric(a)
    values, vectors = np.linalg.eigh(symmetrize(a))
    order = np.argsort(values, kind="stable")[::-1]
    return EigenResult(values[order], _fix_signs(vectors[:, order]), tol)


def jacobi_eig(a, tol=DEFAULT_EIG_TOL, sweeps=100):
    """Cyclic Jacobi eigensolver.

    Slow (O(n^3) per sweep, pure numpy row operations) but entirely
    independent of LAPACK; used to cross-check ``sym_eig`` on small inputs.
    """
    a = as_matrix(a, "a")
    _check_symmetric(a)
    a = symmetrize(a)
    n = a.shape[0]
    v = np.eye(n)
    norm = np.linalg.norm(a)
    for _ in range(sweeps):
        off = np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= 1e-15 * max(norm, 1e-300):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")[::-1]
    return EigenResult(values[order], _fix_signs(v[:, order]), tol)
