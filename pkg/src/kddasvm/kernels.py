"""Kernel functions, Gram matrices and cross-kernel vectors."""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, UnsupportedKernel
from .numerics import symmetrize

FAMILIES = ("linear", "polynomial", "rbf", "sigmoid")
PSD_FAMILIES = ("linear", "polynomial", "rbf")


@dataclass(frozen=True)
class KernelSpec:
    """A kernel family plus its hyperparameters.

    Only the fields belonging to ``family`` are consulted: ``sigma2`` for
    rbf, ``degree`` for polynomial, ``offset`` for sigmoid.
    """

    family: str = "rbf"
    sigma2: float = 1.0
    degree: int = 2
    offset: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInput(f"unknown kernel family {self.family!r}")
        if self.family == "rbf" and not (self.sigma2 > 0 and np.isfinite(self.sigma2)):
            raise InvalidInput(f"rbf kernel needs sigma2 > 0, got {self.sigma2}")
        if self.family == "polynomial" and (int(self.degree) != self.degree or self.degree < 1):
            raise InvalidInput(f"polynomial kernel needs integer degree >= 1, got {self.degree}")

    @classmethod
    def linear(cls):
        return cls("linear")

    @classmethod
    def rbf(cls, sigma2):
        return cls("rbf", sigma2=float(sigma2))

    @classmethod
    def polynomial(cls, degree):
        return cls("polynomial", degree=int(degree))

    @classmethod
    def sigmoid(cls, offset=0.0):
        return cls("sigmoid", offset=float(offset))

    @property
    def is_psd(self):
        return self.family in PSD_FAMILIES

    def require_psd(self, who):
        if not self.is_psd:
            raise UnsupportedKernel(f"{who} needs a positive semi-definite kernel, got {self.family}")


def _as_vector(x, name):
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1 or v.size < 1:
        raise InvalidInput(f"{name}: expected a non-empty 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InvalidInput(f"{name}: contains NaN or Inf")
    return v


def as_samples(samples, name="samples"):
    """Stack ``samples`` into an (L, N) float array, validating shape and finiteness."""
    try:
        x = np.asarray(samples, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"{name}: samples must share one dimension") from exc
    if x.ndim == 1 and x.size:
        x = x[:, None]
    if x.ndim != 2 or x.shape[0] < 1 or x.shape[1] < 1:
        raise InvalidInput(f"{name}: expected a non-empty list of vectors, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise InvalidInput(f"{name}: contains NaN or Inf")
    return x


def _from_dots(spec, dots, sq_a, sq_b):
    if spec.family == "linear":
        return dots
    if spec.family == "polynomial":
        return (dots + 1.0) ** spec.degree
    if spec.family == "sigmoid":
        return np.tanh(dots + spec.offset)
    d2 = np.maximum(sq_a + sq_b - 2.0 * dots, 0.0)
    return np.exp(-d2 / (2.0 * spec.sigma2))


def eval(spec, x, y):
    x = _as_vector(x, "x")
    y = _as_vector(y, "y")
    if x.shape != y.shape:
        raise InvalidInput(f"dimension mismatch: {x.size} vs {y.size}")
    return float(_from_dots(spec, float(x @ y), float(x @ x), float(y @ y)))


def cross_gram(spec, a, b):
    """Kernel matrix between two sample sets: entry (i, j) = k(a_i, b_j)."""
    a = as_samples(a, "a")
    b = as_samples(b, "b")
    if a.shape[1] != b.shape[1]:
        raise InvalidInput(f"dimension mismatch: {a.shape[1]} vs {b.shape[1]}")
    sq_a = np.einsum("ij,ij->i", a, a)[:, None]
    sq_b = np.einsum("ij,ij->i", b, b)[None, :]
    return _from_dots(spec, a @ b.T, sq_a, sq_b)


def gram_matrix(spec, samples):
    x = as_samples(samples)
    k = symmetrize(cross_gram(spec, x, x))
    if spec.family == "rbf":
        np.fill_diagonal(k, 1.0)
    return k


def kernel_vector(spec, train, z):
    train = as_samples(train, "train")
    z = _as_vector(z, "z")
    if z.size != train.shape[1]:
        raise InvalidInput(f"dimension mismatch: z has {z.size}, training data has {train.shape[1]}")
    return cross_gram(spec, train, z[None, :])[:, 0]
