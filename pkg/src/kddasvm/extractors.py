"""Kernel-space feature extraction: KDDA and the KPCA baseline.

Feature-space vectors are never formed. Every discriminant direction is an
expansion ``sum_i coeffs[i, m] * phi(z_i)`` over the mapped training
samples, so projecting a new sample only needs its kernel vector against
the training set.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidConfig, InvalidInput
from .kernels import KernelSpec, as_samples, cross_gram, gram_matrix
from .numerics import sym_eig, symmetrize

BETWEEN_TOL = 1e-10
KPCA_TOL = 1e-10


@dataclass(frozen=True)
class ClassIndex:
    """Per-sample class ids plus the bookkeeping derived from them.

    ``classes`` holds the sorted distinct ids; ``codes[i]`` is the position
    of sample i's class inside ``classes``.
    """

    labels: np.ndarray
    classes: np.ndarray
    codes: np.ndarray
    class_sizes: np.ndarray

    @classmethod
    def from_labels(cls, labels):
        labels = np.asarray(labels)
        if labels.ndim != 1 or labels.size == 0:
            raise InvalidInput("labels must be a non-empty 1-D sequence")
        classes, codes, sizes = np.unique(labels, return_inverse=True, return_counts=True)
        return cls(labels, classes, codes.ravel(), sizes)

    @property
    def n_samples(self):
        return int(self.labels.size)

    @property
    def n_classes(self):
        return int(self.classes.size)

    def one_hot(self):
        e = np.zeros((self.n_samples, self.n_classes))
        e[np.arange(self.n_samples), self.codes] = 1.0
        return e


def _class_index(labels, n_samples):
    index = labels if isinstance(labels, ClassIndex) else ClassIndex.from_labels(labels)
    if index.n_samples != n_samples:
        raise InvalidInput(f"{index.n_samples} labels for {n_samples} samples")
    if np.any(index.class_sizes == 0):
        raise InvalidInput("every class needs at least one sample")
    return index


@dataclass(frozen=True)
class KddaModel:
    train_samples: np.ndarray
    kernel: KernelSpec
    coeffs: np.ndarray
    # fit diagnostics, kept so the whitening and within-class spectrum can be audited
    between_eigenvalues: np.ndarray = field(default_factory=lambda: np.zeros(0))
    within_eigenvalues: np.ndarray = field(default_factory=lambda: np.zeros(0))
    whitened_between: np.ndarray = field(default_factory=lambda: np.zeros((0, 0)))
    train_features: np.ndarray = field(default_factory=lambda: np.zeros((0, 0)))

    @property
    def m_features(self):
        return int(self.coeffs.shape[1])

    def transform(self, z):
        return kdda_transform(self, z)


def kdda_fit(samples, labels, kernel, m_features=0):
    """Fit kernel direct discriminant analysis.

    Parameters
    ----------
    samples : array-like, shape (L, N)
    labels : array-like of class ids, or a ClassIndex
    kernel : KernelSpec
        Must be positive semi-definite (linear, polynomial or rbf).
    m_features : int
        Number of discriminant features; 0 selects C - 1, or the rank of the
        between-class scatter if that is smaller (e.g. a linear kernel on
        inputs of dimension below C - 1).

    Notes
    -----
    The between-class scatter is diagonalised first and its range whitened
    to the identity. The within-class scatter is then diagonalised inside
    that range and the directions with the smallest within-class spread are
    kept, each scaled by ``(1 + lambda_w) ** -0.5``. Within-class eigenvalues
    of zero therefore scale by one instead of being divided by.
    """
    kernel.require_psd("KDDA")
    x = as_samples(samples)
    index = _class_index(labels, x.shape[0])
    n, c = index.n_samples, index.n_classes
    if c < 2:
        raise InvalidConfig("KDDA needs at least two classes")
    auto = m_features == 0
    if auto:
        m_features = c - 1
    if not 1 <= m_features <= c - 1:
        raise InvalidConfig(f"m_features must lie in 1..{c - 1} for {c} classes, got {m_features}")

    k = gram_matrix(kernel, x)
    e = index.one_hot()
    sizes = index.class_sizes.astype(np.float64)
    class_mean = e / sizes
    w = (class_mean - 1.0 / n) * np.sqrt(sizes / n)

    sb = symmetrize(w.T @ k @ w)
    eb = sym_eig(sb, tol=BETWEEN_TOL)
    keep = eb.values > BETWEEN_TOL * max(eb.values[0], 0.0)
    lam_b = eb.values[keep]
    if lam_b.size == 0:
        raise InvalidInput("class means coincide in feature space; no discriminant direction exists")
    if auto:
        m_features = min(m_features, lam_b.size)
    if m_features > lam_b.size:
        raise InvalidConfig(
            f"between-class scatter has rank {lam_b.size}; cannot extract {m_features} features"
        )
    # eigenvalues of W^T K W are the squared norms of the S_b eigen-directions,
    # so dividing by lambda (not sqrt) whitens S_b to the identity
    q = w @ (eb.vectors[:, keep] / lam_b)

    kq = k @ q
    g = class_mean @ e.T
    sw = symmetrize(kq.T @ (kq - g @ kq) / n)
    ew = sym_eig(sw)
    lam_w = np.maximum(ew.values[::-1], 0.0)
    p = ew.vectors[:, ::-1]

    coeffs = np.ascontiguousarray(q @ (p[:, :m_features] / np.sqrt(1.0 + lam_w[:m_features])))
    return KddaModel(
        train_samples=x,
        kernel=kernel,
        coeffs=coeffs,
        between_eigenvalues=lam_b,
        within_eigenvalues=lam_w,
        whitened_between=symmetrize(kq.T @ w @ w.T @ kq),
        train_features=k @ coeffs,
    )


def kdda_transform(model, z):
    """Project one sample (1-D) or a batch (2-D) onto the discriminant features."""
    z = np.asarray(z, dtype=np.float64)
    single = z.ndim == 1
    zs = as_samples(z[None, :] if single else z, "z")
    if zs.shape[1] != model.train_samples.shape[1]:
        raise InvalidInput(
            f"dimension mismatch: got {zs.shape[1]}, model trained on {model.train_samples.shape[1]}"
        )
    y = cross_gram(model.kernel, zs, model.train_samples) @ model.coeffs
    return y[0] if single else y


@dataclass(frozen=True)
class KpcaModel:
    train_samples: np.ndarray
    kernel: KernelSpec
    coeffs: np.ndarray
    eigenvalues: np.ndarray
    gram_col_mean: np.ndarray
    gram_mean: float
    requested: int
    degenerate: bool = False

    @property
    def m_features(self):
        return int(self.coeffs.shape[1])

    @property
    def variances(self):
        """Per-component training variance (centred Gram eigenvalue / L)."""
        return self.eigenvalues / self.train_samples.shape[0]

    def transform(self, z):
        return kpca_transform(self, z)


def kpca_fit(samples, kernel, m_features):
    kernel.require_psd("KPCA")
    x = as_samples(samples)
    n = x.shape[0]
    if m_features < 1 or m_features > n:
        raise InvalidConfig(f"m_features must lie in 1..{n}, got {m_features}")
    k = gram_matrix(kernel, x)
    col_mean = k.mean(axis=0)
    total = float(col_mean.mean())
    kc = k - col_mean[None, :] - col_mean[:, None] + total
    eig = sym_eig(symmetrize(kc), tol=KPCA_TOL)
    # relative to the uncentred Gram as well, so constant data yields exactly zero components
    scale = max(float(eig.values[0]), float(np.max(np.abs(k))))
    positive = int(np.count_nonzero(eig.values > KPCA_TOL * scale))
    m = min(m_features, positive)
    lam = eig.values[:m]
    coeffs = np.ascontiguousarray(eig.vectors[:, :m] / np.sqrt(lam))
    return KpcaModel(
        train_samples=x,
        kernel=kernel,
        coeffs=coeffs,
        eigenvalues=np.ascontiguousarray(lam),
        gram_col_mean=col_mean,
        gram_mean=total,
        requested=m_features,
        degenerate=m == 0,
    )


def kpca_transform(model, z):
    z = np.asarray(z, dtype=np.float64)
    single = z.ndim == 1
    zs = as_samples(z[None, :] if single else z, "z")
    if zs.shape[1] != model.train_samples.shape[1]:
        raise InvalidInput(
            f"dimension mismatch: got {zs.shape[1]}, model trained on {model.train_samples.shape[1]}"
        )
    kz = cross_gram(model.kernel, zs, model.train_samples)
    kz = kz - kz.mean(axis=1, keepdims=True) - model.gram_col_mean[None, :] + model.gram_mean
    y = kz @ model.coeffs
    return y[0] if single else y
