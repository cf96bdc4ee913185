"""Evaluate model use case."""

from pathlib import Path

import logfire
from pydantic import BaseModel

from absa.domain.model import EvalReport
from absa.domain.repository import CatalogRepository, DatasetRepository, ModelRepository
from absa.domain.service import CorpusService, EvaluationService
from absa.domain.value import Split, TaskMode

from ..base import BaseUseCase


class EvaluateModelRequest(BaseModel):
    """Evaluate model request."""

    model_path: Path
    dataset_dir: Path
    split: Split
    task: TaskMode = TaskMode.ASPECT_SENTIMENT
    # When given, must match the catalog the model was trained with
    catalog_path: Path | None = None


class EvaluateModelUseCase(BaseUseCase):
    """Use case for scoring a saved model on one split."""

    def __init__(
        self,
        model_repository: ModelRepository,
        dataset_repository: DatasetRepository,
        catalog_repository: CatalogRepository,
        corpus_service: CorpusService,
        evaluation_service: EvaluationService,
    ) -> None:
        self.model_repository = model_repository
        self.dataset_repository = dataset_repository
        self.catalog_repository = catalog_repository
        self.corpus_service = corpus_service
        self.evaluation_service = evaluation_service

    def execute(self, request: EvaluateModelRequest) -> EvalReport:
        """Infer-mode predictions on the split, scored with micro-F1.

        Raises:
            ArtifactNotFoundError: If the model or the split does not exist
            CatalogMismatchError: If the given catalog differs from the model's
        """
        with logfire.span(
            "evaluate_model.execute",
            model=str(request.model_path),
            split=request.split.value,
            task=request.task.value,
        ):
            catalog = None
            if request.catalog_path is not None:
                catalog = self.catalog_repository.load(request.catalog_path)
            bundle = self.model_repository.load(request.model_path, catalog)
            documents = self.dataset_repository.load_split(request.dataset_dir, request.split, bundle.catalog)
            documents = self.corpus_service.prepare_evaluation(documents)
            return self.evaluation_service.evaluate(
                bundle.network, documents, request.task, request.split, bundle.embedding_source
            )
