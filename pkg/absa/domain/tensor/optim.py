"""Gradient clipping and stochastic gradient descent."""

from collections.abc import Iterable, Mapping
from typing import TypeVar

import numpy as np

from absa.domain.error import DimensionError, InvalidConfigurationError
from absa.domain.tensor.tensor import Grad, RowSparse, Tensor, to_dense

K = TypeVar("K")


def global_norm(grads: Iterable[Grad]) -> float:
    """L2 norm of all gradients concatenated."""
    total = 0.0
    for grad in grads:
        if isinstance(grad, RowSparse):
            total += grad.squared_norm()
        else:
            total += float(np.sum(grad * grad))
    return float(np.sqrt(total))


def clip_grad_norm(grads: Mapping[K, Grad], max_norm: float) -> dict[K, Grad]:
    """Scale every gradient by max_norm/g when the global norm g exceeds max_norm."""
    if max_norm <= 0:
        raise InvalidConfigurationError(f"max_norm must be positive, got {max_norm}")
    norm = global_norm(grads.values())
    if norm <= max_norm:
        return dict(grads)
    factor = max_norm / norm
    return {
        key: grad.scaled(factor) if isinstance(grad, RowSparse) else grad * factor
        for key, grad in grads.items()
    }


def sgd_step(param: Tensor, grad: Tensor | Grad, lr: float) -> Tensor:
    """param - lr * grad, as a new tensor."""
    g = grad.data if isinstance(grad, Tensor) else to_dense(grad)
    if g.shape != param.shape:
        raise DimensionError("sgd_step", param.shape, g.shape)
    return Tensor(param.data - lr * g, requires_grad=param.requires_grad, name=param.name)


class SGD:
    """Plain SGD updating parameters in place.

    Row-sparse gradients only touch their rows, so a step over a large
    embedding table costs as much as the rows the batch used.
    """

    def __init__(self, learning_rate: float):
        if learning_rate <= 0:
            raise InvalidConfigurationError(f"Learning rate must be positive, got {learning_rate}")
        self.learning_rate = learning_rate

    def step(self, grads: Mapping[Tensor, Grad]) -> None:
        for param, grad in grads.items():
            if isinstance(grad, RowSparse):
                if grad.shape != param.shape:
                    raise DimensionError("sgd_step", param.shape, grad.shape)
                np.subtract.at(param.data, grad.rows, self.learning_rate * grad.values)
            else:
                if grad.shape != param.shape:
                    raise DimensionError("sgd_step", param.shape, grad.shape)
                param.data -= self.learning_rate * grad
