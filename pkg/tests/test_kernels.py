import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kddasvm import kernels
from kddasvm.errors import InvalidInput, UnsupportedKernel
from kddasvm.kernels import KernelSpec, gram_matrix, kernel_vector
from kddasvm.numerics import sym_eig


def test_rbf_values():
    spec = KernelSpec.rbf(2.0)
    assert kernels.eval(spec, [1.0, 2.0], [1.0, 2.0]) == 1.0
    # |x - y|^2 = 4 = 2 * sigma2
    assert kernels.eval(spec, [0.0, 0.0], [2.0, 0.0]) == pytest.approx(np.exp(-1), abs=1e-12)


def test_other_families():
    assert kernels.eval(KernelSpec.polynomial(2), [1, 0], [1, 1]) == 4.0
    assert kernels.eval(KernelSpec.linear(), [1, 2], [3, 4]) == 11.0
    assert kernels.eval(KernelSpec.sigmoid(0.5), [1, 0], [1, 1]) == pytest.approx(np.tanh(1.5))


def test_spec_validation():
    with pytest.raises(InvalidInput):
        KernelSpec.rbf(0.0)
    with pytest.raises(InvalidInput):
        KernelSpec("polynomial", degree=0)
    with pytest.raises(InvalidInput):
        KernelSpec("cubic")
    with pytest.raises(UnsupportedKernel):
        KernelSpec.sigmoid().require_psd("KDDA")


def test_dimension_mismatch():
    with pytest.raises(InvalidInput):
        kernels.eval(KernelSpec.linear(), [1, 2], [1, 2, 3])
    with pytest.raises(InvalidInput):
        kernel_vector(KernelSpec.linear(), [[1.0, 2.0]], [1.0])


def test_gram_small_cases():
    spec = KernelSpec.rbf(1.0)
    np.testing.assert_array_equal(gram_matrix(spec, [[3.0, 4.0]]), [[1.0]])
    np.testing.assert_allclose(gram_matrix(spec, [[1.0, 1.0], [1.0, 1.0]]), np.ones((2, 2)))
    with pytest.raises(InvalidInput):
        gram_matrix(spec, [])


def test_linear_gram_is_xxt(rng):
    x = rng.standard_normal((3, 4))
    expected = np.array([[sum(a * b for a, b in zip(r, s)) for s in x] for r in x])
    np.testing.assert_allclose(gram_matrix(KernelSpec.linear(), x), expected, atol=1e-12)


def test_kernel_vector(rng):
    assert kernel_vector(KernelSpec.linear(), [[2.0, 0.0]], [3.0, 1.0]).tolist() == [6.0]
    x = rng.standard_normal((5, 3))
    spec = KernelSpec.rbf(0.7)
    kv = kernel_vector(spec, x, x[2])
    assert kv[2] == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(kv, gram_matrix(spec, x)[2], atol=1e-12)


@pytest.mark.parametrize("spec", [KernelSpec.linear(), KernelSpec.polynomial(3), KernelSpec.rbf(0.5)])
def test_gram_symmetric_psd(spec):
    g = np.random.default_rng(7)
    for _ in range(10):
        x = g.standard_normal((g.integers(2, 12), g.integers(1, 5)))
        k = gram_matrix(spec, x)
        assert np.max(np.abs(k - k.T)) <= 1e-12
        lam = sym_eig(k).values
        assert lam[-1] >= -1e-8 * lam[0]


@settings(max_examples=50, deadline=None)
@given(st.floats(1e-3, 1e3), st.floats(0, 50), st.floats(0, 50))
def test_rbf_range_and_monotone(sigma2, d1, d2):
    spec = KernelSpec.rbf(sigma2)
    k1 = kernels.eval(spec, [0.0], [d1])
    k2 = kernels.eval(spec, [0.0], [d2])
    assert 0.0 <= k1 <= 1.0
    if d1 < d2:
        assert k1 >= k2
