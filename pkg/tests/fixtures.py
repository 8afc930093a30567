import numpy as np


def lda_fixture(seed):
    """Random labelled Gaussian classes: dim <= 10, C <= 4, L <= 40."""
    g = np.random.default_rng(seed)
    c = int(g.integers(2, 5))
    dim = int(g.integers(c, 11))
    per = int(g.integers(max(3, dim // c + 2), 40 // c + 1))
    centres = 2.0 * g.standard_normal((c, dim))
    scales = g.uniform(0.3, 1.5, size=dim)
    x = np.vstack([centres[i] + scales * g.standard_normal((per, dim)) for i in range(c)])
    y = np.repeat(np.arange(1, c + 1), per)
    perm = g.permutation(y.size)
    return x[perm], y[perm]


def svm_fixture(seed):
    """Random binary problem with at most 6 points, both labels present."""
    g = np.random.default_rng(seed)
    n = int(g.integers(2, 7))
    x = g.standard_normal((n, 2))
    y = np.where(g.random(n) < 0.5, -1.0, 1.0)
    y[0], y[1] = 1.0, -1.0
    c = float(g.choice([0.1, 0.5, 1.0, 10.0]))
    return x, y, c
