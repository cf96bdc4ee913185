"""In-memory implementation of the embedding repository for testing."""

from collections.abc import Iterator
from copy import deepcopy
from pathlib import Path

from absa.domain.error import InvalidConfigurationError
from absa.domain.model import EmbeddingTable
from absa.domain.repository import EmbeddingRepository
from absa.persistence.error import ArtifactNotFoundError


class InMemoryEmbeddingRepository(EmbeddingRepository):
    """Tables and corpora keyed by path."""

    def __init__(self) -> None:
        self._tables: dict[Path, EmbeddingTable] = {}
        self._corpora: dict[Path, list[str]] = {}

    def add_corpus(self, path: Path, lines: list[str]) -> None:
        self._corpora[path] = list(lines)

    def load(self, path: Path, expected_dim: int | None = None) -> EmbeddingTable:
        table = self._tables.get(path)
        if table is None:
            raise ArtifactNotFoundError(path, "Embedding file")
        if expected_dim is not None and table.dim != expected_dim:
            raise InvalidConfigurationError(
                f"Embedding dimension {table.dim} differs from configured dimension {expected_dim}"
            )
        return deepcopy(table)

    def save(self, table: EmbeddingTable, path: Path) -> None:
        self._tables[path] = deepcopy(table)

    def read_corpus(self, path: Path) -> Iterator[str]:
        if path not in self._corpora:
            raise ArtifactNotFoundError(path, "Corpus")
        return iter(list(self._corpora[path]))
