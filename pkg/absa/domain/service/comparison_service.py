"""Side-by-side comparison of architectures on the same data."""

from collections.abc import Callable, Mapping, Sequence

import logfire

from absa.domain.model import ComparisonRow, ComparisonTable, Document
from absa.domain.network import Network
from absa.domain.value import Architecture, AspectCatalog, EmbeddingSource, Split, TaskMode

from .base import Service
from .evaluation_service import EvaluationService, MajorityBaseline, majority_baseline
from .reference import MAJORITY_BASELINE

ArchitectureTrainer = Callable[[Architecture], Network]


class ComparisonService(Service):
    """Trains each architecture and scores every split in both task modes."""

    def __init__(self, evaluation_service: EvaluationService):
        self.evaluation_service = evaluation_service

    def compare(
        self,
        architectures: Sequence[Architecture],
        train_architecture: ArchitectureTrainer,
        train: Sequence[Document],
        splits: Mapping[Split, Sequence[Document]],
        catalog: AspectCatalog,
        embedding_source: EmbeddingSource,
    ) -> ComparisonTable:
        rows: list[ComparisonRow] = []
        with logfire.span("comparison_service.compare", architectures=[a.value for a in architectures]):
            baseline = majority_baseline(train, catalog)
            rows.extend(self._rows(MAJORITY_BASELINE, None, None, baseline, splits))
            for architecture in architectures:
                network = train_architecture(architecture)
                rows.extend(self._rows(architecture.value, architecture, embedding_source, network, splits))
        return ComparisonTable(rows=rows)

    def _rows(
        self,
        system: str,
        architecture: Architecture | None,
        embedding_source: EmbeddingSource | None,
        predictor: Network | MajorityBaseline,
        splits: Mapping[Split, Sequence[Document]],
    ) -> list[ComparisonRow]:
        rows = []
        for split, documents in splits.items():
            if not documents:
                continue
            predictions = self.evaluation_service.predict_all(predictor, documents)
            for task in TaskMode:
                report = self.evaluation_service.evaluate(
                    predictor, documents, task, split, embedding_source, predictions=predictions
                )
                rows.append(
                    ComparisonRow(
                        system=system,
                        architecture=architecture,
                        embedding_source=embedding_source,
                        split=split,
                        task=task,
                        f1=report.f1,
                        reference_f1=report.reference_f1,
                        delta=report.delta,
                    )
                )
        return rows
