"""Multi-class classifiers on top of binary SVMs, plus nearest neighbour.

All ``*_predict`` functions accept one feature vector (returning a class
id) or a 2-D batch (returning an array of ids). Ties always resolve to the
smallest class id, or the earliest stored sample for nearest neighbour.
"""
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InvalidInput, KddaSvmError
from .kernels import as_samples
from .svm import SvmTrainConfig, decision, svm_train

STD_FLOOR = 1e-6


def _prepare(features, labels):
    x = as_samples(features, "features")
    y = np.asarray(labels).ravel()
    if y.size != x.shape[0]:
        raise InvalidInput(f"{y.size} labels for {x.shape[0]} feature vectors")
    classes = np.unique(y)
    if classes.size < 2:
        raise InvalidInput("multi-class training needs at least two classes")
    return x, y, classes


def _query(x, dim):
    x = np.asarray(x, dtype=np.float64)
    single = x.ndim == 1
    xs = as_samples(x[None, :] if single else x, "x")
    if xs.shape[1] != dim:
        raise InvalidInput(f"dimension mismatch: got {xs.shape[1]}, model expects {dim}")
    return xs, single


@dataclass(frozen=True)
class OvrModel:
    classes: np.ndarray
    models: tuple
    dim: int

    def scores(self, x):
        xs, single = _query(x, self.dim)
        s = np.column_stack([decision(m, xs) for m in self.models])
        return s[0] if single else s


def ovr_train(features, labels, cfg: SvmTrainConfig):
    x, y, classes = _prepare(features, labels)
    models = []
    for cls in classes:
        target = np.where(y == cls, 1.0, -1.0)
        try:
            models.append(svm_train(x, target, cfg))
        except KddaSvmError as exc:
            raise type(exc)(f"one-vs-rest model for class {cls}: {exc}") from exc
    return OvrModel(classes, tuple(models), x.shape[1])


def argmax_class(scores, classes):
    """Column of the largest score per row; first (smallest id) wins ties."""
    return classes[np.argmax(scores, axis=-1)]


def ovr_predict(model, x):
    s = model.scores(x)
    out = argmax_class(s, model.classes)
    return out.item() if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class PairStats:
    """Gaussian fit (mean, std) of one pair model's outputs on each class."""

    pos_mean: float
    pos_std: float
    neg_mean: float
    neg_std: float


@dataclass(frozen=True)
class PairwiseModel:
    classes: np.ndarray
    pairs: tuple  # (i, j) class-id tuples, i < j; i trained as +1
    models: tuple
    stats: tuple
    dim: int

    def pair_probabilities(self, x):
        """Matrix P with P[a, b] = probability of class a over class b (rows sum with P[b, a] to 1)."""
        xs, single = _query(x, self.dim)
        k = self.classes.size
        pos = {c: n for n, c in enumerate(self.classes)}
        p = np.zeros((xs.shape[0], k, k))
        for (ci, cj), model, st in zip(self.pairs, self.models, self.stats):
            f = decision(model, xs)
            gi = _gauss_pdf(f, st.pos_mean, st.pos_std)
            gj = _gauss_pdf(f, st.neg_mean, st.neg_std)
            total = gi + gj
            pij = np.where(total > 0, gi / np.where(total > 0, total, 1.0), 0.5)
            a, b = pos[ci], pos[cj]
            p[:, a, b] = pij
            p[:, b, a] = 1.0 - pij
        return p[0] if single else p


def _gauss_pdf(f, mean, std):
    z = (f - mean) / std
    return np.exp(-0.5 * z * z) / (std * np.sqrt(2.0 * np.pi))


def pairwise_train(features, labels, cfg: SvmTrainConfig):
    x, y, classes = _prepare(features, labels)
    pairs, models, stats = [], [], []
    for ci, cj in combinations(classes, 2):
        mask = (y == ci) | (y == cj)
        xs = x[mask]
        target = np.where(y[mask] == ci, 1.0, -1.0)
        try:
            model = svm_train(xs, target, cfg)
        except KddaSvmError as exc:
            raise type(exc)(f"pairwise model for classes ({ci}, {cj}): {exc}") from exc
        f = decision(model, xs)
        fi, fj = f[target > 0], f[target < 0]
        stats.append(PairStats(
            float(fi.mean()), max(float(fi.std()), STD_FLOOR),
            float(fj.mean()), max(float(fj.std()), STD_FLOOR),
        ))
        pairs.append((ci.item(), cj.item()))
        models.append(model)
    return PairwiseModel(classes, tuple(pairs), tuple(models), tuple(stats), x.shape[1])


def pairwise_predict(model, x):
    p = model.pair_probabilities(x)
    out = argmax_class(p.sum(axis=-1), model.classes)
    return out.item() if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class NnModel:
    features: np.ndarray
    labels: np.ndarray


def nn_train(features, labels):
    x = as_samples(features, "features")
    y = np.asarray(labels).ravel()
    if y.size != x.shape[0]:
        raise InvalidInput(f"{y.size} labels for {x.shape[0]} feature vectors")
    return NnModel(x.copy(), y.copy())


def nn_predict(model, x):
    xs, single = _query(x, model.features.shape[1])
    # explicit differences keep exact ties exact
    nearest = [np.argmin(np.sum((model.features - q) ** 2, axis=1)) for q in xs]
    out = model.labels[np.asarray(nearest, dtype=int)]
    return out[0].item() if single else out
