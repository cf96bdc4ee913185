"""Conflict filtering and split preparation."""

from collections import Counter
from collections.abc import Sequence

import logfire

from absa.domain.model import ConflictReport, Document
from absa.domain.value import Split

from .base import Service


def filter_conflicts(documents: Sequence[Document]) -> tuple[list[Document], ConflictReport]:
    """Drop every training document that gives one aspect two different polarities.

    Documents of other splits pass through untouched.
    """
    retained: list[Document] = []
    per_aspect: Counter[str] = Counter()
    for doc in documents:
        conflicted = doc.conflicted_aspects if doc.split is Split.TRAIN else []
        if conflicted:
            per_aspect.update(conflicted)
        else:
            retained.append(doc)
    report = ConflictReport(
        input_count=len(documents),
        dropped=len(documents) - len(retained),
        retained=len(retained),
        per_aspect=dict(sorted(per_aspect.items())),
    )
    return retained, report


class CorpusService(Service):
    """Prepares parsed splits for training and evaluation."""

    def prepare_training(self, documents: Sequence[Document]) -> tuple[list[Document], ConflictReport]:
        with logfire.span("corpus_service.prepare_training", documents=len(documents)):
            retained, report = filter_conflicts(documents)
            logfire.info(
                "Conflicting training documents dropped",
                input_count=report.input_count,
                dropped=report.dropped,
                per_aspect=report.per_aspect,
            )
            return retained, report

    def prepare_evaluation(self, documents: Sequence[Document]) -> list[Document]:
        """Evaluation keeps every document; conflicts resolve to the first-listed polarity."""
        conflicted = [doc.id for doc in documents if doc.has_conflict]
        if conflicted:
            logfire.warn(
                "Conflicting gold labels resolved to the first-listed polarity",
                documents=len(conflicted),
                examples=conflicted[:5],
            )
        return list(documents)
