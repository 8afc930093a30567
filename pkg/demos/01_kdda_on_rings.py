"""KDDA features on concentric rings.

The class means of concentric rings all sit near the origin, so a linear
discriminant has almost nothing to work with. An RBF kernel maps radius
into a direction the discriminant analysis can pick up.
"""
import numpy as np

from kddasvm import KernelSpec, kdda_fit, kdda_transform, make_rings

ds = make_rings(classes=3, per_class=40, noise=0.05, seed=0)

# linear kernel: direct LDA in the input plane
linear = kdda_fit(ds.samples, ds.labels, KernelSpec.linear())
# rbf kernel with a scale comparable to the ring spacing
kernel = kdda_fit(ds.samples, ds.labels, KernelSpec.rbf(4.0))

for name, model in (("linear", linear), ("rbf", kernel)):
    f = kdda_transform(model, ds.samples)
    means = np.array([f[ds.labels == c].mean(axis=0) for c in (1, 2, 3)])
    spread = np.mean([f[ds.labels == c].std(axis=0).mean() for c in (1, 2, 3)])
    gaps = np.linalg.norm(means[:, None] - means[None], axis=-1)[np.triu_indices(3, 1)]
    print(f"{name:6s} M={model.m_features}  min class-mean gap {gaps.min():.3f}  "
          f"mean within-class std {spread:.3f}")

# the between-class scatter is whitened to the identity inside the model
print("whitened between-class scatter:\n", np.round(kernel.whitened_between, 10))
# within-class eigenvalues of the retained directions (ascending)
print("within-class eigenvalues:", np.round(kernel.within_eigenvalues, 4))
