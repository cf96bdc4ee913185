"""File-backed repository implementations."""

from absa.persistence.repository.artifact import FileArtifactRepository
from absa.persistence.repository.catalog import FileCatalogRepository
from absa.persistence.repository.dataset import FileDatasetRepository
from absa.persistence.repository.embedding import FileEmbeddingRepository
from absa.persistence.repository.model import FileModelRepository

__all__ = [
    "FileArtifactRepository",
    "FileCatalogRepository",
    "FileDatasetRepository",
    "FileEmbeddingRepository",
    "FileModelRepository",
]
