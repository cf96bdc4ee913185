"""Mini-batch SGD training with dev-based early stopping."""

import time
from collections.abc import Sequence
from dataclasses import dataclass

import logfire
import numpy as np

from absa.domain.error import NumericError, TrainingDivergedError
from absa.domain.model import DetectorConfig, Document, EpochRecord, HyperConfig, TrainHistory
from absa.domain.network import LogisticAspectDetector, Network, PipelineNetwork
from absa.domain.tensor import SGD, clip_grad_norm, ops
from absa.domain.value import Mode, TaskMode

from .base import Service
from .evaluation_service import micro_f1


@dataclass
class TrainingResult:
    """Trained network (holding the best dev epoch's parameters) and its history."""

    network: Network
    history: TrainHistory


def dev_f1(network: Network, documents: Sequence[Document]) -> float:
    """Aspect+sentiment micro-F1 used for model selection.

    Pipeline networks are scored on gold aspects so that selection measures
    the polarity classifier alone; the detector is fit after training.
    """
    predictions = {
        doc.id: network.predict_gold_aspects(doc.tokens, list(doc.labels)) for doc in documents
    }
    gold = {doc.id: doc.labels for doc in documents}
    return micro_f1(predictions, gold, TaskMode.ASPECT_SENTIMENT).f1


def fit_detector(
    network: PipelineNetwork,
    train: Sequence[Document],
    dev: Sequence[Document],
    config: DetectorConfig,
) -> LogisticAspectDetector:
    """Fit the logistic detector on the network's current embeddings and tune thresholds on dev."""
    size = network.catalog.size

    def matrices(documents: Sequence[Document]) -> tuple[np.ndarray, np.ndarray]:
        features = np.stack([network.embedding.mean_vector(d.tokens) for d in documents])
        targets = np.zeros((len(documents), size))
        for row, doc in enumerate(documents):
            for aspect in doc.labels:
                targets[row, network.catalog.index(aspect)] = 1.0
        return features, targets

    detector = LogisticAspectDetector(size, network.embedding.mean_vector)
    features, targets = matrices(train)
    losses = detector.fit(features, targets, config.epochs, config.learning_rate, config.l2)
    if dev:
        detector.tune_thresholds(*matrices(dev))
    logfire.info(
        "Aspect detector trained",
        documents=len(train),
        final_loss=losses[-1] if losses else None,
        tuned_on=len(dev),
    )
    network.detector = detector
    return detector


class Trainer(Service):
    """Trains one network in place."""

    def __init__(self, record_wall_clock: bool = False):
        self.record_wall_clock = record_wall_clock

    def train(
        self,
        network: Network,
        train: Sequence[Document],
        dev: Sequence[Document],
        hyper: HyperConfig,
        detector: DetectorConfig | None = None,
    ) -> TrainingResult:
        """Shuffled mini-batch SGD on the mean batch loss.

        After every epoch the network is scored on ``dev``; the parameters of
        the best epoch are restored at the end. Training stops once dev F1
        has not improved for ``hyper.patience`` epochs.

        Raises:
            TrainingDivergedError: If a batch loss is not finite
        """
        selection = list(dev)
        if not selection:
            logfire.warn("No dev documents; selecting epochs on training data")
            selection = list(train)

        instances = network.instances([(doc.tokens, doc.labels) for doc in train])
        rng = np.random.default_rng([hyper.seed, 1])
        optimizer = SGD(hyper.learning_rate)

        epochs: list[EpochRecord] = []
        best_epoch: int | None = None
        best_f1 = -1.0
        best_params = network.params.arrays()
        stale = 0
        stopped_early = False

        with logfire.span(
            "trainer.train",
            architecture=network.architecture.value,
            instances=len(instances),
            learning_rate=hyper.learning_rate,
            batch_size=hyper.batch_size,
            seed=hyper.seed,
        ):
            for epoch in range(1, hyper.epochs + 1):
                started = time.perf_counter()
                loss = self._run_epoch(network, instances, hyper, optimizer, rng, epoch)
                score = dev_f1(network, selection)
                seconds = time.perf_counter() - started if self.record_wall_clock else None
                epochs.append(EpochRecord(epoch=epoch, loss=loss, dev_f1=score, seconds=seconds))
                logfire.info("Epoch finished", epoch=epoch, loss=loss, dev_f1=score)

                if score > best_f1:
                    best_f1, best_epoch, stale = score, epoch, 0
                    best_params = network.params.arrays()
                else:
                    stale += 1
                    if stale >= hyper.patience:
                        stopped_early = True
                        logfire.info("Early stopping", epoch=epoch, best_epoch=best_epoch)
                        break

            network.params.load(best_params)
            if isinstance(network, PipelineNetwork) and detector is not None:
                fit_detector(network, train, dev, detector)

        history = TrainHistory(epochs=epochs, best_epoch=best_epoch, stopped_early=stopped_early)
        return TrainingResult(network=network, history=history)

    def _run_epoch(
        self,
        network: Network,
        instances: list,
        hyper: HyperConfig,
        optimizer: SGD,
        rng: np.random.Generator,
        epoch: int,
    ) -> float:
        """One pass over shuffled instances; returns the mean instance loss."""
        if not instances:
            return 0.0
        order = rng.permutation(len(instances))
        total = 0.0
        for batch_index, start in enumerate(range(0, len(order), hyper.batch_size), start=1):
            batch = [instances[i] for i in order[start : start + hyper.batch_size]]
            tape = network.new_tape()
            try:
                terms = [network.instance_loss(inst, Mode.TRAIN, rng, tape) for inst in batch]
                loss = ops.scale(ops.total(terms, tape), 1.0 / len(batch), tape)
            except NumericError as exc:
                raise TrainingDivergedError(epoch, batch_index, float("nan")) from exc
            value = loss.item()
            if not np.isfinite(value):
                raise TrainingDivergedError(epoch, batch_index, value)
            grads = network.backward(tape, loss)
            if hyper.clip_norm is not None:
                grads = clip_grad_norm(grads, hyper.clip_norm)
            optimizer.step(grads)
            total += value * len(batch)
        return total / len(instances)
