"""Majority-class baseline use case."""

from pathlib import Path

import logfire
from pydantic import BaseModel

from absa.domain.model import EvalReport
from absa.domain.repository import ArtifactRepository
from absa.domain.service import EvaluationService, majority_baseline
from absa.domain.value import TaskMode
from absa.persistence.reports import to_json

from ..base import BaseUseCase
from ..workspace import ExperimentLoader

BASELINE_FILE = "baseline.json"


class BaselineRequest(BaseModel):
    """Baseline request."""

    dataset_dir: Path
    catalog_path: Path | None = None
    output_dir: Path | None = None


class BaselineResponse(BaseModel):
    """Baseline response: one report per evaluation split and task."""

    aspect: str
    polarity: str
    reports: list[EvalReport]


class BaselineUseCase(BaseUseCase):
    """Use case for scoring the majority-class baseline on every evaluation split."""

    def __init__(
        self,
        loader: ExperimentLoader,
        evaluation_service: EvaluationService,
        artifact_repository: ArtifactRepository,
    ) -> None:
        self.loader = loader
        self.evaluation_service = evaluation_service
        self.artifact_repository = artifact_repository

    def execute(self, request: BaselineRequest) -> BaselineResponse:
        """Raises InvalidConfigurationError if the training split has no labels."""
        with logfire.span("baseline.execute", dataset=str(request.dataset_dir)):
            data = self.loader.load(request.dataset_dir, request.catalog_path)
            baseline = majority_baseline(data.train, data.catalog)
            reports = [
                self.evaluation_service.evaluate(baseline, documents, task, split)
                for split, documents in data.evaluation_splits().items()
                for task in TaskMode
            ]
            response = BaselineResponse(
                aspect=baseline.aspect,
                polarity=baseline.polarity.value,
                reports=reports,
            )
            if request.output_dir is not None:
                self.artifact_repository.write_text(request.output_dir / BASELINE_FILE, to_json(response))
            return response
