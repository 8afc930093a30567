import numpy as np
import pytest

from kddasvm.dataset import make_blobs, make_rings
from kddasvm.errors import InvalidConfig, InvalidInput, UnsupportedKernel
from kddasvm.extractors import ClassIndex, kdda_fit, kdda_transform, kpca_fit, kpca_transform
from kddasvm.kernels import KernelSpec

from fixtures import lda_fixture
from oracles import align_signs, direct_lda, pca, rel_error


def test_kdda_matches_explicit_direct_lda():
    x, y = lda_fixture(3)
    model = kdda_fit(x, y, KernelSpec.linear())
    proj = direct_lda(x, y, model.m_features)
    z = np.vstack([x, np.random.default_rng(0).standard_normal((5, x.shape[1]))])
    got = kdda_transform(model, z)
    want = align_signs(got, z @ proj)
    assert rel_error(got, want) <= 1e-6


def test_between_rank_bounded_by_classes():
    ds = make_rings(3, 10, 0.1, seed=1)
    model = kdda_fit(ds.samples, ds.labels, KernelSpec.rbf(1.0))
    assert model.between_eigenvalues.size <= 2
    assert model.m_features == 2


def test_one_sample_per_class():
    x = np.array([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 2.0, 0.0]])
    model = kdda_fit(x, [1, 2, 3], KernelSpec.rbf(1.0))
    np.testing.assert_array_equal(model.within_eigenvalues, 0.0)
    # unit scaling: final features are the whitened between-class basis itself,
    # so their between-class scatter is exactly the identity
    f = model.train_features
    sb = f.T @ f / 3 - np.outer(f.mean(0), f.mean(0))
    np.testing.assert_allclose(sb, np.eye(2), atol=1e-8)


def test_whitening_diagnostic(rng):
    ds = make_blobs(4, 8, dim=3, spread=0.5, seed=2)
    model = kdda_fit(ds.samples, ds.labels, KernelSpec.rbf(4.0))
    m = model.whitened_between.shape[0]
    assert np.linalg.norm(model.whitened_between - np.eye(m)) <= 1e-6


def test_transform_consistent_with_fit():
    ds = make_rings(3, 12, 0.05, seed=4)
    model = kdda_fit(ds.samples, ds.labels, KernelSpec.rbf(2.0))
    np.testing.assert_allclose(kdda_transform(model, ds.samples), model.train_features, atol=1e-10)
    np.testing.assert_allclose(model.transform(ds.samples[0]), model.train_features[0], atol=1e-10)


def test_two_class_means_separate():
    ds = make_blobs(2, 10, dim=2, spread=0.3, seed=5)
    model = kdda_fit(ds.samples, ds.labels, KernelSpec.rbf(1.0), 1)
    f = kdda_transform(model, ds.samples)[:, 0]
    assert abs(f[ds.labels == 1].mean() - f[ds.labels == 2].mean()) >= 1e-6


def test_sample_order_invariance():
    x, y = lda_fixture(11)
    spec = KernelSpec.rbf(5.0)
    a = kdda_fit(x, y, spec)
    perm = np.random.default_rng(1).permutation(y.size)
    b = kdda_fit(x[perm], y[perm], spec)
    fa, fb = kdda_transform(a, x), kdda_transform(b, x)
    assert rel_error(fb, align_signs(fb, fa)) <= 1e-6


def test_kdda_errors():
    x, y = lda_fixture(2)
    c = np.unique(y).size
    with pytest.raises(InvalidConfig):
        kdda_fit(x, y, KernelSpec.linear(), c)
    with pytest.raises(UnsupportedKernel):
        kdda_fit(x, y, KernelSpec.sigmoid(), 1)
    with pytest.raises(InvalidConfig):
        kdda_fit(x, np.ones(y.size), KernelSpec.linear())
    model = kdda_fit(x, y, KernelSpec.linear())
    with pytest.raises(InvalidInput):
        kdda_transform(model, np.zeros(x.shape[1] + 1))


def test_explicit_m_above_rank_rejected_but_default_clamps():
    ds = make_rings(4, 10, 0.05, seed=0)
    with pytest.raises(InvalidConfig):
        kdda_fit(ds.samples, ds.labels, KernelSpec.linear(), 3)
    assert kdda_fit(ds.samples, ds.labels, KernelSpec.linear()).m_features == 2


def test_class_index():
    idx = ClassIndex.from_labels([3, 1, 3, 2])
    assert idx.classes.tolist() == [1, 2, 3]
    assert idx.class_sizes.tolist() == [1, 1, 2]
    assert idx.one_hot().sum(axis=0).tolist() == [1, 1, 2]


# --- KPCA -------------------------------------------------------------------

def test_kpca_matches_pca(rng):
    x = rng.standard_normal((15, 4)) * [3.0, 2.0, 1.0, 0.5]
    model = kpca_fit(x, KernelSpec.linear(), 3)
    mean, comps, var = pca(x, 3)
    np.testing.assert_allclose(model.variances, var, rtol=1e-8)
    z = np.vstack([x, rng.standard_normal((4, 4))])
    got = kpca_transform(model, z)
    want = align_signs(got, (z - mean) @ comps)
    assert rel_error(got, want) <= 1e-6


def test_kpca_duplicated_dataset():
    x = np.array([[0.0, 1.0], [2.0, 0.5], [1.0, 3.0], [4.0, 2.0], [3.0, -1.0]])
    a = kpca_fit(x, KernelSpec.linear(), 2)
    b = kpca_fit(np.vstack([x, x]), KernelSpec.linear(), 2)
    fa, fb = kpca_transform(a, x), kpca_transform(b, x)
    assert rel_error(fb, align_signs(fb, fa)) <= 1e-8


def test_kpca_constant_data_degenerate():
    model = kpca_fit(np.tile([1.0, 2.0], (6, 1)), KernelSpec.rbf(1.0), 2)
    assert model.m_features == 0
    assert model.degenerate
    assert kpca_transform(model, [1.0, 2.0]).shape == (0,)


def test_kpca_training_projection_centered_and_consistent(rng):
    x = rng.standard_normal((12, 3))
    model = kpca_fit(x, KernelSpec.rbf(2.0), 5)
    f = kpca_transform(model, x)
    np.testing.assert_allclose(f.mean(axis=0), 0.0, atol=1e-8)
    np.testing.assert_allclose(kpca_transform(model, x[4]), f[4], atol=1e-12)
    lam = model.eigenvalues
    assert np.all(np.diff(lam) <= 0) and lam[-1] >= -1e-8 * lam[0]


def test_kpca_errors(rng):
    with pytest.raises(InvalidConfig):
        kpca_fit(rng.standard_normal((3, 2)), KernelSpec.linear(), 4)
    with pytest.raises(InvalidInput):
        kpca_fit([], KernelSpec.linear(), 1)
    with pytest.raises(UnsupportedKernel):
        kpca_fit(rng.standard_normal((3, 2)), KernelSpec.sigmoid(), 1)
