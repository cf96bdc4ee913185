"""Named parameter storage."""

from collections.abc import Iterator, Mapping

import numpy as np

from absa.domain.error import DimensionError, InvalidConfigurationError
from absa.domain.tensor import Tensor


class ParamStore:
    """Ordered mapping of parameter name -> trainable tensor.

    Insertion order is the documented serialization order.
    """

    def __init__(self) -> None:
        self._tensors: dict[str, Tensor] = {}

    def add(self, name: str, data: np.ndarray) -> Tensor:
        if name in self._tensors:
            raise InvalidConfigurationError(f"Duplicate parameter {name!r}")
        tensor = Tensor.parameter(np.array(data, dtype=np.float64, copy=True), name)
        self._tensors[name] = tensor
        return tensor

    def uniform(self, name: str, shape: tuple[int, ...], scale: float, rng: np.random.Generator) -> Tensor:
        return self.add(name, rng.uniform(-scale, scale, size=shape))

    def zeros(self, name: str, shape: tuple[int, ...]) -> Tensor:
        return self.add(name, np.zeros(shape))

    def __getitem__(self, name: str) -> Tensor:
        return self._tensors[name]

    def __contains__(self, name: object) -> bool:
        return name in self._tensors

    def __iter__(self) -> Iterator[str]:
        return iter(self._tensors)

    def __len__(self) -> int:
        return len(self._tensors)

    def tensors(self) -> list[Tensor]:
        return list(self._tensors.values())

    def arrays(self) -> dict[str, np.ndarray]:
        """Copies of every parameter, in order."""
        return {name: t.data.copy() for name, t in self._tensors.items()}

    def load(self, arrays: Mapping[str, np.ndarray]) -> None:
        """Overwrite parameter values in place; names and shapes must match."""
        missing = set(self._tensors) - set(arrays)
        if missing:
            raise InvalidConfigurationError(f"Missing parameters: {sorted(missing)}")
        for name, tensor in self._tensors.items():
            value = np.asarray(arrays[name], dtype=np.float64)
            if value.shape != tensor.shape:
                raise DimensionError(f"load {name}", tensor.shape, value.shape)
            tensor.data = value.copy()

    @property
    def count(self) -> int:
        return sum(t.size for t in self._tensors.values())
