"""Prediction use cases: streaming (CLI) and batch (HTTP)."""

from collections.abc import Iterable, Iterator
from pathlib import Path

from pydantic import BaseModel, Field

from absa.domain.model import PredictionRecord
from absa.domain.repository import ModelRepository
from absa.domain.service import PredictionService

from ..base import BaseUseCase


class PredictStreamRequest(BaseModel):
    """Stream prediction request; ``lines`` is consumed once, lazily."""

    model_path: Path
    lines: Iterable[bytes]


class PredictStreamUseCase(BaseUseCase):
    """Use case for predicting over one document per input line.

    Records are produced lazily, one per line, so memory does not grow with
    the input.
    """

    def __init__(self, model_repository: ModelRepository) -> None:
        self.model_repository = model_repository

    def execute(self, request: PredictStreamRequest) -> Iterator[PredictionRecord]:
        """Raises ArtifactNotFoundError or ModelFormatError before the first record."""
        service = PredictionService(self.model_repository.load(request.model_path))
        return service.predict_lines(request.lines)


class PredictDocumentsRequest(BaseModel):
    """HTTP prediction request."""

    documents: list[str] = Field(default_factory=list)


class PredictDocumentsResponse(BaseModel):
    """HTTP prediction response."""

    predictions: list[PredictionRecord]


class PredictDocumentsUseCase(BaseUseCase):
    """Use case for predicting a batch of documents with the served model."""

    def __init__(self, prediction_service: PredictionService) -> None:
        self.prediction_service = prediction_service

    def execute(self, request: PredictDocumentsRequest) -> PredictDocumentsResponse:
        return PredictDocumentsResponse(
            predictions=self.prediction_service.predict_documents(request.documents)
        )
