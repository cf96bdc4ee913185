"""Stand-in aspect detector for the pipeline architectures.

One logistic classifier per aspect over the mean token embedding of a
document. A per-aspect threshold on the logit is tuned on dev data for F1.
"""

from collections.abc import Callable, Sequence
from typing import Protocol

import numpy as np

from absa.domain.error import DimensionError, UntrainedDetectorError


class AspectDetector(Protocol):
    """Proposes the aspect indices a document mentions."""

    def detect(self, tokens: Sequence[str]) -> frozenset[int]: ...


Featurizer = Callable[[Sequence[str]], np.ndarray]


class LogisticAspectDetector:
    """Per-aspect logistic regression; never predicts polarity."""

    def __init__(self, aspects: int, featurize: Featurizer):
        self.aspects = aspects
        self.featurize = featurize
        self.weights: np.ndarray | None = None
        self.bias: np.ndarray | None = None
        self.thresholds = np.zeros(aspects)

    @property
    def trained(self) -> bool:
        return self.weights is not None

    def fit(
        self,
        features: np.ndarray,
        targets: np.ndarray,
        epochs: int,
        learning_rate: float,
        l2: float = 0.0,
    ) -> list[float]:
        """Full-batch gradient descent on the mean logistic loss.

        ``targets`` is an (N, |A|) 0/1 matrix. Returns the loss per epoch.
        """
        if features.ndim != 2 or targets.shape != (features.shape[0], self.aspects):
            raise DimensionError("detector_fit", features.shape, targets.shape)
        n, dim = features.shape
        weights = np.zeros((self.aspects, dim))
        bias = np.zeros(self.aspects)
        losses = []
        for _ in range(epochs):
            logits = features @ weights.T + bias
            probs = 0.5 * (1.0 + np.tanh(0.5 * logits))
            # log(1 + e^-|z|) form of the logistic loss
            loss = np.mean(np.maximum(logits, 0) - logits * targets + np.log1p(np.exp(-np.abs(logits))))
            losses.append(float(loss * self.aspects + 0.5 * l2 * np.sum(weights * weights)))
            delta = (probs - targets) / max(n, 1)
            weights -= learning_rate * (delta.T @ features + l2 * weights)
            bias -= learning_rate * delta.sum(axis=0)
        self.weights = weights
        self.bias = bias
        return losses

    def scores(self, features: np.ndarray) -> np.ndarray:
        """Logits, (|A|,) for one feature vector or (N, |A|) for a matrix."""
        if self.weights is None or self.bias is None:
            raise UntrainedDetectorError()
        return features @ self.weights.T + self.bias

    def tune_thresholds(self, features: np.ndarray, targets: np.ndarray) -> None:
        """Per aspect, pick the logit threshold maximizing F1 on held-out data.

        Candidates are 0 and the midpoints between consecutive distinct
        scores; ties keep the earliest candidate, so 0 wins ties. Aspects
        without any positive example keep threshold 0.
        """
        scores = self.scores(features)
        for a in range(self.aspects):
            gold = targets[:, a].astype(bool)
            if not gold.any():
                self.thresholds[a] = 0.0
                continue
            distinct = np.unique(scores[:, a])
            candidates = [0.0, float(distinct[0]) - 1.0]
            candidates.extend(((distinct[:-1] + distinct[1:]) / 2.0).tolist())
            best, best_f1 = 0.0, -1.0
            for threshold in candidates:
                predicted = scores[:, a] > threshold
                tp = int(np.sum(predicted & gold))
                fp = int(np.sum(predicted & ~gold))
                fn = int(np.sum(~predicted & gold))
                f1 = 2 * tp / (2 * tp + fp + fn) if tp else 0.0
                if f1 > best_f1:
                    best, best_f1 = threshold, f1
            self.thresholds[a] = best

    def detect(self, tokens: Sequence[str]) -> frozenset[int]:
        """Aspects whose logit strictly exceeds their threshold."""
        scores = self.scores(self.featurize(tokens))
        return frozenset(int(a) for a in np.flatnonzero(scores > self.thresholds))

    def arrays(self) -> dict[str, np.ndarray]:
        if self.weights is None or self.bias is None:
            raise UntrainedDetectorError()
        return {
            "detector.weights": self.weights.copy(),
            "detector.bias": self.bias.copy(),
            "detector.thresholds": self.thresholds.copy(),
        }

    def load(self, arrays: dict[str, np.ndarray]) -> None:
        weights = np.asarray(arrays["detector.weights"], dtype=np.float64)
        if weights.shape[0] != self.aspects:
            raise DimensionError("detector_load", (self.aspects,), weights.shape)
        self.weights = weights
        self.bias = np.asarray(arrays["detector.bias"], dtype=np.float64)
        self.thresholds = np.asarray(arrays["detector.thresholds"], dtype=np.float64)


def detect_aspects(tokens: Sequence[str], detector: AspectDetector) -> frozenset[int]:
    return detector.detect(tokens)
