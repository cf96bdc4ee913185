"""Common structure of the four architectures."""

from abc import ABC, abstractmethod
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from absa.domain.model import NetworkConfig, PredictionSet
from absa.domain.network.embedding_layer import EmbeddingLayer
from absa.domain.network.encoder import BiLstmEncoder, CnnEncoder, Encoder
from absa.domain.network.params import ParamStore
from absa.domain.tensor import Gradients, GradTape, Tensor
from absa.domain.value import Architecture, AspectCatalog, EncoderKind, Mode, Polarity

EmbeddingFactory = Callable[[ParamStore, int], EmbeddingLayer]


@dataclass(frozen=True)
class Instance:
    """One training example.

    End-to-end models train on one instance per document with a joint
    (|A|, 4) one-hot target. Pipeline models train on one instance per
    gold aspect of a document with a (3,) one-hot target.
    """

    tokens: tuple[str, ...]
    target: np.ndarray
    aspect: int | None = None


class Network(ABC):
    """Embedding layer, encoder and heads over one parameter store."""

    architecture: Architecture

    def __init__(
        self,
        catalog: AspectCatalog,
        embedding_factory: EmbeddingFactory,
        config: NetworkConfig,
        rng: np.random.Generator,
    ):
        self.catalog = catalog
        self.config = config
        self.params = ParamStore()
        encoder_kind = self.architecture.encoder
        min_length = config.max_width if encoder_kind is EncoderKind.CNN else 1
        self.embedding: EmbeddingLayer = embedding_factory(self.params, min_length)
        self.encoder: Encoder = self._build_encoder(encoder_kind, rng)

    def _build_encoder(self, kind: EncoderKind, rng: np.random.Generator) -> Encoder:
        cfg = self.config
        if kind is EncoderKind.CNN:
            return CnnEncoder(
                self.params, rng, self.embedding.dim, cfg.filter_widths, cfg.filters, cfg.dropout, cfg.init_scale
            )
        return BiLstmEncoder(self.params, rng, self.embedding.dim, cfg.hidden_size, cfg.dropout, cfg.init_scale)

    def encode(
        self,
        tokens: Sequence[str],
        mode: Mode,
        rng: np.random.Generator | None = None,
        tape: GradTape | None = None,
    ) -> Tensor:
        """Document vector v."""
        return self.encoder(self.embedding(tokens, tape), mode, rng, tape)

    def new_tape(self) -> GradTape:
        return GradTape(owner=self)

    def backward(self, tape: GradTape, loss: Tensor) -> Gradients:
        """Exact gradients of ``loss`` for every parameter the tape reached.

        Raises:
            TapeMismatchError: If the tape was recorded by another model
        """
        tape.check_owner(self)
        return tape.backward(loss)

    def parameters(self) -> list[Tensor]:
        return self.params.tensors()

    @abstractmethod
    def instances(self, documents: Sequence[tuple[Sequence[str], Mapping[str, Polarity]]]) -> list[Instance]:
        """Training instances for (tokens, labels) pairs."""

    @abstractmethod
    def instance_loss(
        self,
        instance: Instance,
        mode: Mode,
        rng: np.random.Generator | None,
        tape: GradTape | None = None,
    ) -> Tensor: ...

    @abstractmethod
    def predict(self, tokens: Sequence[str]) -> PredictionSet:
        """Infer-mode prediction for one document."""

    def predict_gold_aspects(self, tokens: Sequence[str], aspects: Sequence[str]) -> PredictionSet:
        """Prediction restricted to known aspects; end-to-end models ignore the hint."""
        return self.predict(tokens)
