"""Embedding table repository interface."""

from abc import ABC, abstractmethod
from collections.abc import Iterator
from pathlib import Path

from absa.domain.model import EmbeddingTable


class EmbeddingRepository(ABC):
    """Loads and saves embedding tables."""

    @abstractmethod
    def load(self, path: Path, expected_dim: int | None = None) -> EmbeddingTable:
        """Load a table.

        Raises:
            ArtifactNotFoundError: If the file does not exist
            ParseError: If the file is malformed
            InvalidConfigurationError: If the dimension differs from ``expected_dim``
        """
        pass

    @abstractmethod
    def save(self, table: EmbeddingTable, path: Path) -> None:
        pass

    @abstractmethod
    def read_corpus(self, path: Path) -> Iterator[str]:
        """Lines of a plain-text corpus, read lazily and without line endings.

        Raises:
            ArtifactNotFoundError: If the file does not exist, at call time
            UnreadableFileError: If the file cannot be read or decoded, while iterating
        """
        pass
