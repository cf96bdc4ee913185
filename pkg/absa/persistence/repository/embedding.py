"""File-backed embedding repository."""

from collections.abc import Iterator
from pathlib import Path

import logfire

from absa.domain.model import EmbeddingTable
from absa.domain.repository import EmbeddingRepository
from absa.persistence.embedding_file import load_embeddings, save_embeddings
from absa.persistence.error import ArtifactNotFoundError, reading


class FileEmbeddingRepository(EmbeddingRepository):
    """Embedding tables in the text format of ``absa.persistence.embedding_file``."""

    def __init__(self, unknown_scale: float = 0.01) -> None:
        self.unknown_scale = unknown_scale

    def load(self, path: Path, expected_dim: int | None = None) -> EmbeddingTable:
        if not path.is_file():
            raise ArtifactNotFoundError(path, "Embedding file")
        with logfire.span("embedding_repository.load", path=str(path)):
            table = load_embeddings(path, expected_dim, self.unknown_scale)
            logfire.info(
                "Embeddings loaded",
                vocabulary=table.vocabulary.size,
                dim=table.dim,
                buckets=table.bucket_count,
            )
            return table

    def save(self, table: EmbeddingTable, path: Path) -> None:
        with logfire.span("embedding_repository.save", path=str(path)):
            save_embeddings(table, path)

    def read_corpus(self, path: Path) -> Iterator[str]:
        if not path.is_file():
            raise ArtifactNotFoundError(path, "Corpus")
        return _lines(path)


def _lines(path: Path) -> Iterator[str]:
    with reading(path), path.open(encoding="utf-8") as f:
        for line in f:
            yield line.rstrip("\r\n")
