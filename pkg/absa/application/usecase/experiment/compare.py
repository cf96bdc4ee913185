"""Compare architectures use case."""

from pathlib import Path

import logfire
from pydantic import BaseModel, Field

from absa.config import Settings
from absa.domain.model import ComparisonTable
from absa.domain.network import Network
from absa.domain.repository import ArtifactRepository
from absa.domain.service import ComparisonService, Trainer
from absa.domain.value import Architecture, EmbeddingSource
from absa.persistence.reports import to_json

from ..base import BaseUseCase
from ..workspace import ExperimentLoader, hyper_config, train_bundle

COMPARISON_FILE = "comparison.json"


class CompareRequest(BaseModel):
    """Compare architectures request."""

    dataset_dir: Path
    embeddings_path: Path
    output_dir: Path
    catalog_path: Path | None = None
    architectures: list[Architecture] = Field(default_factory=lambda: list(Architecture), min_length=1)
    embedding_source: EmbeddingSource = EmbeddingSource.OTHER


class CompareResponse(BaseModel):
    """Compare architectures response."""

    table: ComparisonTable
    path: Path


class CompareUseCase(BaseUseCase):
    """Use case for training several architectures on the same data and seed."""

    def __init__(
        self,
        loader: ExperimentLoader,
        trainer: Trainer,
        comparison_service: ComparisonService,
        artifact_repository: ArtifactRepository,
        settings: Settings,
    ) -> None:
        self.loader = loader
        self.trainer = trainer
        self.comparison_service = comparison_service
        self.artifact_repository = artifact_repository
        self.settings = settings

    def execute(self, request: CompareRequest) -> CompareResponse:
        """Each architecture trains with its family's default hyperparameters."""
        with logfire.span("compare.execute", architectures=[a.value for a in request.architectures]):
            data = self.loader.load(
                request.dataset_dir,
                request.catalog_path,
                request.embeddings_path,
                self.settings.embedding.dim,
            )

            def train(architecture: Architecture) -> Network:
                hyper = hyper_config(self.settings, architecture, request.embedding_source)
                bundle, _ = train_bundle(data, hyper, self.settings, self.trainer)
                return bundle.network

            table = self.comparison_service.compare(
                request.architectures,
                train,
                data.train,
                data.evaluation_splits(),
                data.catalog,
                request.embedding_source,
            )
            path = request.output_dir / COMPARISON_FILE
            self.artifact_repository.write_text(path, to_json(table))
            return CompareResponse(table=table, path=path)
