"""Tensors, row-sparse gradients and the gradient tape."""

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from math import prod

import numpy as np

from absa.domain.error import DimensionError, NumericError, TapeMismatchError


class Tensor:
    """Dense double-precision array.

    Tensors compare and hash by identity so they can key gradient maps.
    Values are treated as immutable, with one exception: parameters are
    updated in place by the optimizer during training.
    """

    __slots__ = ("data", "requires_grad", "name")

    def __init__(self, data: np.ndarray | Sequence | float, requires_grad: bool = False, name: str | None = None):
        array = np.asarray(data, dtype=np.float64)
        if not np.isfinite(array).all():
            raise NumericError(f"Tensor {name!r} contains non-finite values")
        self.data = array
        self.requires_grad = requires_grad
        self.name = name

    @classmethod
    def from_flat(cls, shape: Sequence[int], data: Sequence[float], requires_grad: bool = False) -> "Tensor":
        """Build a tensor from a shape and row-major values."""
        if any(d <= 0 for d in shape) or prod(shape) != len(data):
            raise DimensionError("from_flat", tuple(shape), (len(data),))
        return cls(np.asarray(data, dtype=np.float64).reshape(tuple(shape)), requires_grad)

    @classmethod
    def parameter(cls, data: np.ndarray, name: str) -> "Tensor":
        return cls(data, requires_grad=True, name=name)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def size(self) -> int:
        return int(self.data.size)

    def item(self) -> float:
        if self.data.size != 1:
            raise DimensionError("item", self.shape, (1,))
        return float(self.data.reshape(-1)[0])

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"Tensor{label}(shape={self.shape}, requires_grad={self.requires_grad})"


class RowSparse:
    """Gradient touching only some rows of a matrix.

    ``rows`` may repeat; repeated rows add up. Used for embedding tables,
    where a batch touches a handful of rows out of many thousands.
    """

    __slots__ = ("rows", "values", "shape")

    def __init__(self, rows: np.ndarray, values: np.ndarray, shape: tuple[int, ...]):
        rows = np.asarray(rows, dtype=np.int64)
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (len(rows), *shape[1:]):
            raise DimensionError("row_sparse", values.shape, (len(rows), *shape[1:]))
        self.rows = rows
        self.values = values
        self.shape = tuple(shape)

    def coalesce(self) -> "RowSparse":
        """Merge repeated rows; rows come out sorted."""
        unique, inverse = np.unique(self.rows, return_inverse=True)
        merged = np.zeros((len(unique), *self.shape[1:]))
        np.add.at(merged, inverse, self.values)
        return RowSparse(unique, merged, self.shape)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.shape)
        np.add.at(dense, self.rows, self.values)
        return dense

    def scaled(self, factor: float) -> "RowSparse":
        return RowSparse(self.rows, self.values * factor, self.shape)

    def squared_norm(self) -> float:
        merged = self.coalesce()
        return float(np.sum(merged.values * merged.values))

    def __add__(self, other: "RowSparse") -> "RowSparse":
        if other.shape != self.shape:
            raise DimensionError("row_sparse_add", self.shape, other.shape)
        return RowSparse(
            np.concatenate([self.rows, other.rows]),
            np.concatenate([self.values, other.values]),
            self.shape,
        )


Grad = np.ndarray | RowSparse


def accumulate(current: Grad | None, update: Grad) -> Grad:
    """Sum two gradients of the same tensor."""
    if current is None:
        return update
    if isinstance(current, RowSparse) and isinstance(update, RowSparse):
        return current + update
    if isinstance(current, RowSparse):
        current, update = update, current
    dense = np.array(current, dtype=np.float64, copy=True)
    if isinstance(update, RowSparse):
        np.add.at(dense, update.rows, update.values)
    else:
        dense += update
    return dense


def to_dense(grad: Grad) -> np.ndarray:
    return grad.to_dense() if isinstance(grad, RowSparse) else grad


# Maps the gradient of an operation's output to the gradients of its inputs
BackwardFn = Callable[[np.ndarray], Sequence[Grad | None]]


@dataclass(frozen=True)
class TapeEntry:
    """One recorded operation."""

    op: str
    inputs: tuple[Tensor, ...]
    output: Tensor
    backward: BackwardFn


@dataclass
class GradTape:
    """Ordered record of forward operations.

    Operations append themselves when handed a tape and at least one input
    requires a gradient. ``backward`` replays the record in exact reverse
    order. ``owner`` identifies the model whose forward pass was recorded.
    """

    owner: object | None = None
    entries: list[TapeEntry] = field(default_factory=list)

    def record(self, op: str, inputs: Sequence[Tensor], output: Tensor, backward: BackwardFn) -> None:
        self.entries.append(TapeEntry(op, tuple(inputs), output, backward))
        output.requires_grad = True

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[TapeEntry]:
        return iter(self.entries)

    def check_owner(self, owner: object) -> None:
        if self.owner is not owner:
            raise TapeMismatchError("Gradient tape was recorded by a different model")

    def backward(self, loss: Tensor) -> "Gradients":
        """Gradients of a scalar ``loss`` with respect to every recorded input."""
        if loss.size != 1:
            raise DimensionError("backward", loss.shape, (1,))
        grads: dict[int, Grad] = {id(loss): np.ones_like(loss.data)}
        visited: list[str] = []
        leaves: dict[int, Tensor] = {}
        produced = {id(e.output) for e in self.entries}

        for entry in reversed(self.entries):
            upstream = grads.pop(id(entry.output), None)
            if upstream is None:
                continue
            visited.append(entry.op)
            for tensor, grad in zip(entry.inputs, entry.backward(to_dense(upstream)), strict=True):
                if grad is None or not tensor.requires_grad:
                    continue
                grads[id(tensor)] = accumulate(grads.get(id(tensor)), grad)
                if id(tensor) not in produced:
                    leaves[id(tensor)] = tensor

        return Gradients({leaves[k]: g for k, g in grads.items() if k in leaves}, tuple(visited))


class Gradients(dict[Tensor, Grad]):
    """Leaf tensor -> gradient, plus the order in which operations were replayed."""

    def __init__(self, grads: dict[Tensor, Grad] | None = None, visited: tuple[str, ...] = ()):
        super().__init__(grads or {})
        self.visited = visited

    def dense(self, tensor: Tensor) -> np.ndarray:
        """Dense gradient of ``tensor``; zeros when it was not reached."""
        grad = self.get(tensor)
        if grad is None:
            return np.zeros(tensor.shape)
        return to_dense(grad)
