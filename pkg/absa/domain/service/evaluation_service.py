"""Micro-averaged F1 scoring, the majority-class baseline and model evaluation."""

from collections import Counter
from collections.abc import Mapping, Sequence

import logfire

from absa.domain.error import EvaluationError, InvalidConfigurationError
from absa.domain.model import AspectPrediction, Document, EvalReport, PredictionSet
from absa.domain.network import Network
from absa.domain.value import AspectCatalog, EmbeddingSource, Polarity, Split, TaskMode

from .base import Service
from .reference import MAJORITY_BASELINE, reference_score

LabelMap = Mapping[str, Polarity]


def _items(doc_id: str, labels: LabelMap, task: TaskMode) -> set[tuple[str, ...]]:
    if task is TaskMode.ASPECT_ONLY:
        return {(doc_id, aspect) for aspect in labels}
    return {(doc_id, aspect, Polarity(p).value) for aspect, p in labels.items()}


def _as_labels(prediction: PredictionSet | LabelMap) -> LabelMap:
    return prediction.labels if isinstance(prediction, PredictionSet) else prediction


def micro_f1(
    predictions: Mapping[str, PredictionSet | LabelMap],
    gold: Mapping[str, LabelMap],
    task: TaskMode,
    split: Split | None = None,
) -> EvalReport:
    """Micro precision, recall and F1 over (doc, aspect[, polarity]) items.

    Zero denominators give 0.

    Raises:
        EvaluationError: If the two sides cover different document ids
    """
    missing_predictions = set(gold) - set(predictions)
    missing_gold = set(predictions) - set(gold)
    if missing_predictions or missing_gold:
        raise EvaluationError(missing_predictions, missing_gold)

    tp = fp = fn = 0
    for doc_id, gold_labels in gold.items():
        predicted = _items(doc_id, _as_labels(predictions[doc_id]), task)
        expected = _items(doc_id, gold_labels, task)
        tp += len(predicted & expected)
        fp += len(predicted - expected)
        fn += len(expected - predicted)

    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return EvalReport(
        task=task,
        split=split,
        documents=len(gold),
        tp=tp,
        fp=fp,
        fn=fn,
        precision=precision,
        recall=recall,
        f1=f1,
    )


class MajorityBaseline:
    """Predicts the most frequent training (aspect, polarity) pair for every document."""

    def __init__(self, aspect: str, polarity: Polarity, frequency: float):
        self.aspect = aspect
        self.polarity = polarity
        self.frequency = frequency

    def predict(self, tokens: Sequence[str] = ()) -> PredictionSet:
        return PredictionSet(
            aspects={self.aspect: AspectPrediction(polarity=self.polarity, confidence=self.frequency)}
        )


def majority_baseline(documents: Sequence[Document], catalog: AspectCatalog) -> MajorityBaseline:
    """Baseline over the training data; ties go to the smallest (aspect index, class index).

    Raises:
        InvalidConfigurationError: If the documents carry no labels
    """
    counts: Counter[tuple[int, int]] = Counter()
    for doc in documents:
        for aspect, polarity in doc.labels.items():
            counts[(catalog.index(aspect), polarity.joint_index)] += 1
    if not counts:
        raise InvalidConfigurationError("Majority baseline needs labeled training documents")
    (aspect_index, class_index), count = min(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return MajorityBaseline(
        catalog.names[aspect_index],
        Polarity.from_joint_index(class_index),
        count / sum(counts.values()),
    )


class EvaluationService(Service):
    """Runs models over documents and scores them."""

    def predict_all(self, network: Network | MajorityBaseline, documents: Sequence[Document]) -> dict[str, PredictionSet]:
        return {doc.id: network.predict(doc.tokens) for doc in documents}

    def evaluate(
        self,
        network: Network | MajorityBaseline,
        documents: Sequence[Document],
        task: TaskMode,
        split: Split | None = None,
        embedding_source: EmbeddingSource | None = None,
        predictions: Mapping[str, PredictionSet] | None = None,
    ) -> EvalReport:
        """Infer-mode predictions scored against gold labels.

        The report carries the published score of the matching cell when the
        architecture and embedding source identify one.
        """
        system = MAJORITY_BASELINE if isinstance(network, MajorityBaseline) else network.architecture.value
        with logfire.span(
            "evaluation_service.evaluate",
            system=system,
            split=split.value if split else None,
            task=task.value,
            documents=len(documents),
        ):
            if predictions is None:
                predictions = self.predict_all(network, documents)
            gold = {doc.id: doc.labels for doc in documents}
            report = micro_f1(predictions, gold, task, split)
            report = report.with_reference(reference_score(system, embedding_source, task, split))
            logfire.info(
                "Evaluation finished",
                split=split.value if split else None,
                task=task.value,
                precision=report.precision,
                recall=report.recall,
                f1=report.f1,
            )
            return report
