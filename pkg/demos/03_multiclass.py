"""One-vs-rest, pairwise coupling and nearest neighbour on the same features."""
import numpy as np

from kddasvm import (
    KernelSpec,
    SvmTrainConfig,
    SplitSpec,
    kdda_fit,
    kdda_transform,
    make_rings,
    nn_predict,
    nn_train,
    ovr_predict,
    ovr_train,
    pairwise_predict,
    pairwise_train,
    split_per_class,
)

ds = make_rings(classes=4, per_class=50, noise=0.05, seed=3)
train, test = split_per_class(ds, SplitSpec(k_train=20, seed=0))

kdda = kdda_fit(train.samples, train.labels, KernelSpec.rbf(8.0))
f_train = kdda_transform(kdda, train.samples)
f_test = kdda_transform(kdda, test.samples)

cfg = SvmTrainConfig(c_cost=10.0, kernel=KernelSpec.rbf(1.0))
ovr = ovr_train(f_train, train.labels, cfg)
pw = pairwise_train(f_train, train.labels, cfg)
nn = nn_train(f_train, train.labels)

print(f"{len(ovr.models)} one-vs-rest models, {len(pw.models)} pairwise models")
for name, pred in (
    ("one-vs-rest", ovr_predict(ovr, f_test)),
    ("pairwise", pairwise_predict(pw, f_test)),
    ("nearest neighbour", nn_predict(nn, f_test)),
):
    print(f"{name:18s} test accuracy {np.mean(pred == test.labels):.3f}")

# pairwise probabilities for one test point: row i, column j = P(i | i or j)
print(np.round(pw.pair_probabilities(f_test[0]), 3))
