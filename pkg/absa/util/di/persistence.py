"""Persistence providers."""

from dishka import Scope, provide

from absa.config import Settings
from absa.domain.repository import (
    ArtifactRepository,
    CatalogRepository,
    DatasetRepository,
    EmbeddingRepository,
    ModelRepository,
)
from absa.persistence.repository import (
    FileArtifactRepository,
    FileCatalogRepository,
    FileDatasetRepository,
    FileEmbeddingRepository,
    FileModelRepository,
)
from absa.util.di.base import ProviderBase


class PersistenceProvider(ProviderBase):
    """Persistence component base."""

    __mock_component__ = "persistence"


class ProdPersistenceProvider(PersistenceProvider):
    """Production persistence provider using the local filesystem."""

    __is_mock__ = False

    scope = Scope.APP

    @provide
    def get_dataset_repository(self) -> DatasetRepository:
        """Provide dataset repository."""
        return FileDatasetRepository()

    @provide
    def get_catalog_repository(self) -> CatalogRepository:
        """Provide catalog repository."""
        return FileCatalogRepository()

    @provide
    def get_embedding_repository(self, settings: Settings) -> EmbeddingRepository:
        """Provide embedding repository."""
        return FileEmbeddingRepository(unknown_scale=settings.embedding.unknown_scale)

    @provide
    def get_model_repository(self) -> ModelRepository:
        """Provide model repository."""
        return FileModelRepository()

    @provide
    def get_artifact_repository(self) -> ArtifactRepository:
        """Provide artifact repository."""
        return FileArtifactRepository()
