"""End-to-end architectures: one 4-way head per aspect over a shared encoder."""

from collections.abc import Sequence

import numpy as np

from absa.domain.error import DimensionError
from absa.domain.model import AspectPrediction, PredictionSet
from absa.domain.network.base import Instance, Network
from absa.domain.tensor import GradTape, Tensor, ops
from absa.domain.value import (
    JOINT_CLASSES,
    NOT_APPLICABLE,
    Architecture,
    AspectCatalog,
    LabelVector,
    Mode,
    Polarity,
    to_label_vector,
)


def aspect_scores(v: Tensor, weight: Tensor, bias: Tensor, tape: GradTape | None = None) -> Tensor:
    """softmax(W^(a) v + b^(a)) for every aspect, as an (|A|, 4) matrix.

    The heads are stacked: rows 4a..4a+3 of ``weight`` belong to aspect a.
    """
    if v.data.ndim != 1 or weight.shape[1] != v.shape[0]:
        raise DimensionError("aspect_scores", weight.shape, v.shape)
    aspects = weight.shape[0] // JOINT_CLASSES
    logits = ops.add(ops.matmul(weight, v, tape), bias, tape)
    return ops.softmax(ops.reshape(logits, (aspects, JOINT_CLASSES), tape), tape)


def decode(probs: np.ndarray) -> LabelVector:
    """Per-aspect argmax; ties go to the lowest class index, so N/A wins ties."""
    return LabelVector(tuple(int(i) for i in np.argmax(probs, axis=-1)))


def one_hot(z: LabelVector, classes: int = JOINT_CLASSES) -> np.ndarray:
    target = np.zeros((len(z), classes))
    target[np.arange(len(z)), list(z.root)] = 1.0
    return target


def joint_loss(probs: Tensor, gold: LabelVector, tape: GradTape | None = None) -> Tensor:
    """Cross-entropy summed over all aspects."""
    return ops.cross_entropy(one_hot(gold), probs, tape)


def to_prediction_set(probs: np.ndarray, catalog: AspectCatalog) -> PredictionSet:
    z = decode(probs)
    return PredictionSet(
        aspects={
            catalog.names[a]: AspectPrediction(
                polarity=Polarity.from_joint_index(cls),
                confidence=float(probs[a, cls]),
            )
            for a, cls in enumerate(z.root)
            if cls != NOT_APPLICABLE
        }
    )


class JointNetwork(Network):
    """Encoder followed by |A| independent 4-way heads."""

    def __init__(self, architecture: Architecture, catalog, embedding_factory, config, rng):
        self.architecture = architecture
        super().__init__(catalog, embedding_factory, config, rng)
        rows = catalog.size * JOINT_CLASSES
        self.head_weight = self.params.uniform(
            "head.weight", (rows, self.encoder.output_dim), config.init_scale, rng
        )
        self.head_bias = self.params.zeros("head.bias", (rows,))

    def forward(
        self,
        tokens: Sequence[str],
        mode: Mode,
        rng: np.random.Generator | None = None,
        tape: GradTape | None = None,
    ) -> Tensor:
        v = self.encode(tokens, mode, rng, tape)
        return aspect_scores(v, self.head_weight, self.head_bias, tape)

    def instances(self, documents):
        return [
            Instance(tuple(tokens), one_hot(to_label_vector(labels, self.catalog)))
            for tokens, labels in documents
        ]

    def instance_loss(self, instance: Instance, mode, rng, tape=None) -> Tensor:
        probs = self.forward(instance.tokens, mode, rng, tape)
        return ops.cross_entropy(instance.target, probs, tape)

    def predict(self, tokens: Sequence[str]) -> PredictionSet:
        probs = self.forward(tokens, Mode.INFER)
        return to_prediction_set(probs.data, self.catalog)

