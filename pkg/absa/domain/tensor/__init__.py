"""Dense numeric kernel with reverse-mode gradients."""

from absa.domain.tensor import ops
from absa.domain.tensor.gradcheck import finite_diff_gradient, relative_error
from absa.domain.tensor.optim import SGD, clip_grad_norm, global_norm, sgd_step
from absa.domain.tensor.tensor import Grad, Gradients, GradTape, RowSparse, Tensor

__all__ = [
    "SGD",
    "Grad",
    "GradTape",
    "Gradients",
    "RowSparse",
    "Tensor",
    "clip_grad_norm",
    "finite_diff_gradient",
    "global_norm",
    "ops",
    "relative_error",
    "sgd_step",
]
