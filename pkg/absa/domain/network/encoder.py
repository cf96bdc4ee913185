"""Document encoders: CNN with max-over-time pooling and a bidirectional LSTM."""

from abc import ABC, abstractmethod

import numpy as np

from absa.domain.network.params import ParamStore
from absa.domain.tensor import GradTape, Tensor, ops
from absa.domain.value import Mode


class Encoder(ABC):
    """Maps an embedded (T, d) sequence to one fixed-size vector."""

    @property
    @abstractmethod
    def output_dim(self) -> int: ...

    # Sequences are padded to at least this many positions
    min_length: int = 1

    @abstractmethod
    def __call__(
        self,
        x: Tensor,
        mode: Mode,
        rng: np.random.Generator | None,
        tape: GradTape | None = None,
    ) -> Tensor: ...


class CnnEncoder(Encoder):
    """One filter bank per width, ReLU, max-over-time, concatenation, dropout.

    No dropout is applied to the embeddings.
    """

    def __init__(
        self,
        params: ParamStore,
        rng: np.random.Generator,
        dim: int,
        widths: tuple[int, ...],
        filters: int,
        dropout: float,
        init_scale: float,
    ):
        self.widths = widths
        self.filters = filters
        self.dropout = dropout
        self.min_length = max(widths)
        self.banks = [
            (
                params.uniform(f"cnn.filters.{w}", (filters, w, dim), init_scale, rng),
                params.zeros(f"cnn.bias.{w}", (filters,)),
            )
            for w in widths
        ]

    @property
    def output_dim(self) -> int:
        return len(self.widths) * self.filters

    def __call__(self, x, mode, rng, tape=None):
        return cnn_encode(x, self.banks, self.dropout, mode, rng, tape)


def cnn_encode(
    x: Tensor,
    banks: list[tuple[Tensor, Tensor]],
    dropout: float,
    mode: Mode,
    rng: np.random.Generator | None,
    tape: GradTape | None = None,
) -> Tensor:
    pooled = [
        ops.max_over_time(ops.relu(ops.conv1d(x, filters, bias, tape), tape), tape)
        for filters, bias in banks
    ]
    return ops.dropout(ops.concat(pooled, tape), dropout, mode, rng, tape)


class BiLstmEncoder(Encoder):
    """Dropout, forward and backward LSTM, final states concatenated, dropout."""

    def __init__(
        self,
        params: ParamStore,
        rng: np.random.Generator,
        dim: int,
        hidden: int,
        dropout: float,
        init_scale: float,
    ):
        self.hidden = hidden
        self.dropout = dropout
        self.directions = [
            (
                params.uniform(f"lstm.{name}.w_input", (4 * hidden, dim), init_scale, rng),
                params.uniform(f"lstm.{name}.w_hidden", (4 * hidden, hidden), init_scale, rng),
                params.zeros(f"lstm.{name}.bias", (4 * hidden,)),
            )
            for name in ("forward", "backward")
        ]

    @property
    def output_dim(self) -> int:
        return 2 * self.hidden

    def __call__(self, x, mode, rng, tape=None):
        return bilstm_encode(x, self.directions[0], self.directions[1], self.dropout, mode, rng, tape)


def bilstm_encode(
    x: Tensor,
    forward: tuple[Tensor, Tensor, Tensor],
    backward: tuple[Tensor, Tensor, Tensor],
    dropout: float,
    mode: Mode,
    rng: np.random.Generator | None,
    tape: GradTape | None = None,
) -> Tensor:
    x = ops.dropout(x, dropout, mode, rng, tape)
    h_forward = ops.lstm(x, *forward, reverse=False, tape=tape)
    h_backward = ops.lstm(x, *backward, reverse=True, tape=tape)
    return ops.dropout(ops.concat([h_forward, h_backward], tape), dropout, mode, rng, tape)
