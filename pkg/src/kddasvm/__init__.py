"""Kernel direct discriminant analysis and SVM classification."""
from .dataset import Dataset, SplitSpec, load_image_dir, make_blobs, make_rings, split_per_class
from .errors import InvalidConfig, InvalidInput, InvalidMatrix, KddaSvmError, UnsupportedKernel
from .extractors import ClassIndex, KddaModel, KpcaModel, kdda_fit, kdda_transform, kpca_fit, kpca_transform
from .kernels import KernelSpec, gram_matrix, kernel_vector
from .multiclass import (
    nn_predict,
    nn_train,
    ovr_predict,
    ovr_train,
    pairwise_predict,
    pairwise_train,
)
from .numerics import EigenResult, matmul, sym_eig
from .persist import load_model, save_model
from .svm import SvmModel, SvmTrainConfig, decision, kkt_audit, svm_train

__version__ = "0.1.0"
