"""Binary SVM trained by SMO, checked against the KKT conditions."""
import numpy as np

from kddasvm import KernelSpec, SvmTrainConfig, decision, kkt_audit, svm_train

# two points: the hand solution is alpha = (1/2, 1/2), b = -1, f(x) = x1 - 1
m = svm_train([[0.0, 0.0], [2.0, 0.0]], [-1, 1], SvmTrainConfig(10.0, KernelSpec.linear()))
print("alphas", m.alphas, "bias", m.bias, "f(3,0) =", decision(m, [3.0, 0.0]))

# XOR is not linearly separable; an rbf kernel handles it
x = np.array([[1.0, 1.0], [-1.0, -1.0], [1.0, -1.0], [-1.0, 1.0]])
y = np.array([1, 1, -1, -1])
xor = svm_train(x, y, SvmTrainConfig(10.0, KernelSpec.rbf(1.0)))
print("XOR decision values", np.round(decision(xor, x), 3))

# a noisy problem; the audit reports the worst KKT violation
g = np.random.default_rng(1)
x = g.standard_normal((200, 2))
y = np.where(x[:, 0] * x[:, 1] + 0.2 * g.standard_normal(200) > 0, 1, -1)
history = []
model = svm_train(x, y, SvmTrainConfig(1.0, KernelSpec.rbf(0.5)), history=history)
report = kkt_audit(model, x, y)
print(f"{model.n_iter} SMO steps, {model.support_vectors.shape[0]} support vectors, "
      f"dual objective {model.objective:.4f}")
print(f"dual objective never decreased: {bool(np.all(np.diff(history) >= -1e-12))}")
print(f"max KKT violation {report.max_violation:.2e}, sum(alpha*y) = {report.equality_residual:.1e}")
