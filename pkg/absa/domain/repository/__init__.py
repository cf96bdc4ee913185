"""Repository interfaces.

Interfaces live in the domain layer; file-backed and in-memory
implementations live in the persistence layer.
"""

from absa.domain.repository.artifact import ArtifactRepository
from absa.domain.repository.catalog import CatalogRepository
from absa.domain.repository.dataset import DatasetRepository
from absa.domain.repository.embedding import EmbeddingRepository
from absa.domain.repository.model import ModelRepository

__all__ = [
    "ArtifactRepository",
    "CatalogRepository",
    "DatasetRepository",
    "EmbeddingRepository",
    "ModelRepository",
]
