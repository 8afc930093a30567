"""Binary soft-margin kernel SVM trained by sequential minimal optimization.

The dual is handled in minimisation form,

    min_a  0.5 * a^T Q a - sum(a)    s.t.  0 <= a_i <= C,  y^T a = 0,

with ``Q_ij = y_i y_j k(x_i, x_j)``. Each step picks the maximal violating
pair and solves the two-variable subproblem in closed form, so the dual
stays feasible after every update.
"""
from dataclasses import dataclass, field
import warnings

import numpy as np

from .errors import InvalidConfig, InvalidInput
from .kernels import KernelSpec, as_samples, cross_gram, gram_matrix

TAU = 1e-12


class NotConvergedWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class SvmTrainConfig:
    c_cost: float = 10.0
    kernel: KernelSpec = field(default_factory=KernelSpec.linear)
    kkt_tol: float = 1e-3
    max_passes: int = 10_000  # iteration cap is max_passes * L

    def __post_init__(self):
        if not self.c_cost > 0:
            raise InvalidConfig(f"c_cost must be positive, got {self.c_cost}")
        if not self.kkt_tol > 0:
            raise InvalidConfig(f"kkt_tol must be positive, got {self.kkt_tol}")
        if self.max_passes < 1:
            raise InvalidConfig(f"max_passes must be >= 1, got {self.max_passes}")


@dataclass(frozen=True)
class SvmModel:
    support_vectors: np.ndarray
    dual_coeffs: np.ndarray  # alpha_i * y_i
    bias: float
    kernel: KernelSpec
    alphas: np.ndarray
    c_cost: float
    converged: bool = True
    n_iter: int = 0
    objective: float = 0.0
    support_index: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=int))

    def decision(self, x):
        return decision(self, x)


def _check_labels(labels, n):
    y = np.asarray(labels, dtype=np.float64).ravel()
    if y.size != n:
        raise InvalidInput(f"{y.size} labels for {n} samples")
    if not np.all((y == 1.0) | (y == -1.0)):
        raise InvalidInput("binary labels must be +1 or -1")
    if np.all(y == 1.0) or np.all(y == -1.0):
        raise InvalidInput("training labels contain a single class")
    return y


def _dual_objective(alpha, grad):
    # max-form dual value: sum(a) - 0.5 a^T Q a, using grad = Q a - 1
    return 0.5 * float(np.sum(alpha) - alpha @ grad)


def svm_train(samples, labels, cfg, history=None):
    """Train a binary SVM.

    ``history``, if a list, receives the dual objective after every update.
    A model that hits the iteration cap is returned with ``converged=False``
    and a NotConvergedWarning is emitted; callers decide what to do with it.
    """
    x = as_samples(samples)
    n = x.shape[0]
    if n < 2:
        raise InvalidInput("need at least two training samples")
    y = _check_labels(labels, n)
    c = float(cfg.c_cost)
    k = gram_matrix(cfg.kernel, x)
    diag = np.diag(k).copy()

    alpha = np.zeros(n)
    grad = -np.ones(n)
    max_iter = cfg.max_passes * n
    converged = False
    it = 0
    pos = y > 0
    while it < max_iter:
        score = -y * grad
        up = np.where(pos, alpha < c, alpha > 0)
        low = np.where(pos, alpha > 0, alpha < c)
        i = int(np.argmax(np.where(up, score, -np.inf)))
        j = int(np.argmin(np.where(low, score, np.inf)))
        gap = score[i] - score[j]
        if gap <= cfg.kkt_tol:
            converged = True
            break
        eta = max(diag[i] + diag[j] - 2.0 * k[i, j], TAU)
        t = gap / eta
        lim_i = c - alpha[i] if y[i] > 0 else alpha[i]
        lim_j = alpha[j] if y[j] > 0 else c - alpha[j]
        t = min(t, lim_i, lim_j)
        new_i = alpha[i] + y[i] * t
        new_j = alpha[j] - y[j] * t
        if t == lim_i:
            new_i = c if y[i] > 0 else 0.0
        if t == lim_j:
            new_j = 0.0 if y[j] > 0 else c
        alpha[i] = min(max(new_i, 0.0), c)
        alpha[j] = min(max(new_j, 0.0), c)
        grad += y * t * (k[:, i] - k[:, j])
        it += 1
        if history is not None:
            history.append(_dual_objective(alpha, grad))

    score = -y * grad
    free = (alpha > 0) & (alpha < c)
    if np.any(free):
        bias = float(np.mean(score[free]))
    else:
        up = np.where(pos, alpha < c, alpha > 0)
        low = np.where(pos, alpha > 0, alpha < c)
        lo = float(np.max(score[up])) if np.any(up) else float(np.min(score[low]))
        hi = float(np.min(score[low])) if np.any(low) else lo
        bias = 0.5 * (lo + hi)
    if not converged:
        warnings.warn(f"SMO stopped after {it} iterations without meeting kkt_tol", NotConvergedWarning)

    sv = np.flatnonzero(alpha > 0)
    return SvmModel(
        support_vectors=x[sv],
        dual_coeffs=alpha[sv] * y[sv],
        bias=bias,
        kernel=cfg.kernel,
        alphas=alpha[sv],
        c_cost=c,
        converged=converged,
        n_iter=it,
        objective=_dual_objective(alpha, grad),
        support_index=sv,
    )


def decision(model, x):
    """Decision value ``sum_i alpha_i y_i k(x_i, x) + b`` for one sample or a batch."""
    x = np.asarray(x, dtype=np.float64)
    single = x.ndim == 1
    xs = as_samples(x[None, :] if single else x, "x")
    dim = model.support_vectors.shape[1] if model.support_vectors.ndim == 2 else None
    if dim is not None and model.support_vectors.shape[0] and xs.shape[1] != dim:
        raise InvalidInput(f"dimension mismatch: got {xs.shape[1]}, model expects {dim}")
    if model.dual_coeffs.size == 0:
        out = np.full(xs.shape[0], model.bias)
    else:
        out = cross_gram(model.kernel, xs, model.support_vectors) @ model.dual_coeffs + model.bias
    return float(out[0]) if single else out


def dual_objective(samples, labels, alpha, kernel):
    """Max-form dual objective for an explicit multiplier vector."""
    y = np.asarray(labels, dtype=np.float64)
    a = np.asarray(alpha, dtype=np.float64)
    q = gram_matrix(kernel, samples) * np.outer(y, y)
    return float(a.sum() - 0.5 * a @ q @ a)


def full_alphas(model, n_samples):
    a = np.zeros(n_samples)
    a[model.support_index] = model.alphas
    return a


@dataclass(frozen=True)
class KktReport:
    max_violation: float
    equality_residual: float
    box_ok: bool

    def passed(self, tol):
        return self.box_ok and self.max_violation <= tol and self.equality_residual <= 1e-8


def kkt_audit(model, samples, labels):
    """Measure how far a trained model is from the soft-margin KKT conditions.

    For every training point, with m = y f(x):
      alpha = 0      requires m >= 1
      0 < alpha < C  requires m == 1
      alpha = C      requires m <= 1
    ``max_violation`` is the worst shortfall over all points.
    """
    x = as_samples(samples)
    y = _check_labels(labels, x.shape[0])
    alpha = full_alphas(model, x.shape[0])
    c = model.c_cost
    margin = y * decision(model, x)
    viol = np.zeros_like(margin)
    at_zero = alpha <= 0
    at_c = alpha >= c
    free = ~at_zero & ~at_c
    viol[at_zero] = np.maximum(1.0 - margin[at_zero], 0.0)
    viol[at_c] = np.maximum(margin[at_c] - 1.0, 0.0)
    viol[free] = np.abs(margin[free] - 1.0)
    return KktReport(
        max_violation=float(viol.max()),
        equality_residual=float(abs(alpha @ y)),
        box_ok=bool(np.all(model.alphas > 0) and np.all(model.alphas <= c)),
    )
