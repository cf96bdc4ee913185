"""Pipeline architectures: detect aspects, then classify each one's polarity."""

from collections.abc import Sequence

import numpy as np

from absa.domain.model import AspectPrediction, PredictionSet
from absa.domain.network.base import Instance, Network
from absa.domain.network.detector import AspectDetector, LogisticAspectDetector
from absa.domain.tensor import GradTape, Tensor, ops
from absa.domain.value import POLARITY_ORDER, Architecture, Mode, Polarity


def polarity_scores(
    v: Tensor,
    aspect_vector: Tensor,
    weight: Tensor,
    bias: Tensor,
    tape: GradTape | None = None,
) -> Tensor:
    """3-way softmax over [v ; aspect embedding]."""
    features = ops.concat([v, aspect_vector], tape)
    return ops.softmax(ops.add(ops.matmul(weight, features, tape), bias, tape), tape)


def pick_polarity(probs: np.ndarray) -> AspectPrediction:
    """Argmax in positive < negative < neutral order; the lowest index wins ties."""
    index = int(np.argmax(probs))
    return AspectPrediction(polarity=Polarity.from_pipeline_index(index), confidence=float(probs[index]))


class PipelineNetwork(Network):
    """Encoder, 15-dim aspect embedding and one shared 3-way polarity head.

    A document is duplicated for each of its aspects; at prediction time
    the aspects come from ``detector``.
    """

    def __init__(self, architecture: Architecture, catalog, embedding_factory, config, rng):
        self.architecture = architecture
        super().__init__(catalog, embedding_factory, config, rng)
        self.aspect_embedding = self.params.uniform(
            "aspect.embedding", (catalog.size, config.aspect_embedding_dim), config.init_scale, rng
        )
        classes = len(POLARITY_ORDER)
        self.polarity_weight = self.params.uniform(
            "polarity.weight",
            (classes, self.encoder.output_dim + config.aspect_embedding_dim),
            config.init_scale,
            rng,
        )
        self.polarity_bias = self.params.zeros("polarity.bias", (classes,))
        self.detector: AspectDetector = LogisticAspectDetector(catalog.size, self.embedding.mean_vector)

    def classify(
        self,
        tokens: Sequence[str],
        aspect: int,
        mode: Mode,
        rng: np.random.Generator | None = None,
        tape: GradTape | None = None,
    ) -> Tensor:
        v = self.encode(tokens, mode, rng, tape)
        return self._scores(v, aspect, tape)

    def _scores(self, v: Tensor, aspect: int, tape: GradTape | None = None) -> Tensor:
        aspect_vector = ops.gather_row(self.aspect_embedding, aspect, tape)
        return polarity_scores(v, aspect_vector, self.polarity_weight, self.polarity_bias, tape)

    def instances(self, documents):
        out = []
        for tokens, labels in documents:
            for aspect, polarity in sorted(labels.items(), key=lambda kv: self.catalog.index(kv[0])):
                target = np.zeros(len(POLARITY_ORDER))
                target[Polarity(polarity).pipeline_index] = 1.0
                out.append(Instance(tuple(tokens), target, self.catalog.index(aspect)))
        return out

    def instance_loss(self, instance: Instance, mode, rng, tape=None) -> Tensor:
        assert instance.aspect is not None
        probs = self.classify(instance.tokens, instance.aspect, mode, rng, tape)
        return ops.cross_entropy(instance.target, probs, tape)

    def _predict_aspects(self, tokens: Sequence[str], aspects: Sequence[int]) -> PredictionSet:
        if not aspects:
            return PredictionSet()
        # Infer mode is deterministic, so one encoding serves every aspect
        v = self.encode(tokens, Mode.INFER)
        return PredictionSet(
            aspects={
                self.catalog.names[a]: pick_polarity(self._scores(v, a).data) for a in sorted(aspects)
            }
        )

    def predict(self, tokens: Sequence[str]) -> PredictionSet:
        return self._predict_aspects(tokens, sorted(self.detector.detect(tokens)))

    def predict_gold_aspects(self, tokens: Sequence[str], aspects: Sequence[str]) -> PredictionSet:
        """Polarities for known aspects, bypassing the detector."""
        return self._predict_aspects(tokens, [self.catalog.index(a) for a in aspects])


def pipeline_classify(
    tokens: Sequence[str],
    aspect: str,
    network: PipelineNetwork,
    mode: Mode = Mode.INFER,
    rng: np.random.Generator | None = None,
) -> AspectPrediction:
    """Polarity and confidence of one aspect of one document."""
    probs = network.classify(tokens, network.catalog.index(aspect), mode, rng)
    return pick_polarity(probs.data)
