"""Save and load fitted models as ``.npz`` containers.

Every real is stored as raw float64, so a round trip is bit-exact. The
container never uses pickle.
"""
import dataclasses

import numpy as np

from .errors import InvalidInput
from .extractors import KddaModel, KpcaModel
from .kernels import KernelSpec
from .svm import SvmModel

_KINDS = {"kdda": KddaModel, "kpca": KpcaModel, "svm": SvmModel}
_KERNEL_FIELDS = ("family", "sigma2", "degree", "offset")


def save_model(path, model):
    kind = next((k for k, cls in _KINDS.items() if isinstance(model, cls)), None)
    if kind is None:
        raise InvalidInput(f"cannot persist {type(model).__name__}")
    payload = {"kind": np.array(kind)}
    for f in dataclasses.fields(model):
        value = getattr(model, f.name)
        if isinstance(value, KernelSpec):
            for kf in _KERNEL_FIELDS:
                payload[f"kernel.{kf}"] = np.array(getattr(value, kf))
        else:
            payload[f.name] = np.asarray(value)
    with open(path, "wb") as fh:
        np.savez(fh, **payload)


def load_model(path):
    with np.load(path, allow_pickle=False) as data:
        kind = str(data["kind"])
        if kind not in _KINDS:
            raise InvalidInput(f"{path}: unknown model kind {kind!r}")
        cls = _KINDS[kind]
        kernel = KernelSpec(
            family=str(data["kernel.family"]),
            sigma2=float(data["kernel.sigma2"]),
            degree=int(data["kernel.degree"]),
            offset=float(data["kernel.offset"]),
        )
        kwargs = {}
        for f in dataclasses.fields(cls):
            if f.name == "kernel":
                kwargs[f.name] = kernel
                continue
            value = data[f.name]
            kwargs[f.name] = value.item() if value.ndim == 0 else value.copy()
    return cls(**kwargs)
