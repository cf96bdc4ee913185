"""In-memory repository implementations for testing."""

from .artifact import InMemoryArtifactRepository
from .catalog import InMemoryCatalogRepository
from .dataset import InMemoryDatasetRepository
from .embedding import InMemoryEmbeddingRepository
from .model import InMemoryModelRepository

__all__ = [
    "InMemoryArtifactRepository",
    "InMemoryCatalogRepository",
    "InMemoryDatasetRepository",
    "InMemoryEmbeddingRepository",
    "InMemoryModelRepository",
]
