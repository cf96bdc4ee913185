"""Train subword embeddings use case."""

from pathlib import Path

import logfire
from pydantic import BaseModel

from absa.domain.repository import EmbeddingRepository
from absa.domain.service import CorpusStream, EmbeddingService, SkipGramConfig

from ..base import BaseUseCase


class TrainEmbeddingsRequest(BaseModel):
    """Train embeddings request."""

    corpus_path: Path
    output_path: Path
    config: SkipGramConfig


class TrainEmbeddingsResponse(BaseModel):
    """Train embeddings response."""

    output_path: Path
    vocabulary_size: int
    dim: int
    buckets: int
    lines: int
    tokens: int


class TrainEmbeddingsUseCase(BaseUseCase):
    """Use case for training an embedding table on a plain-text corpus."""

    def __init__(self, embedding_repository: EmbeddingRepository, embedding_service: EmbeddingService) -> None:
        self.embedding_repository = embedding_repository
        self.embedding_service = embedding_service

    def execute(self, request: TrainEmbeddingsRequest) -> TrainEmbeddingsResponse:
        """Train and write the table, bucket rows included.

        Raises:
            ArtifactNotFoundError: If the corpus does not exist
            InvalidConfigurationError: If no token survives min-count filtering
        """
        with logfire.span("train_embeddings.execute", corpus=str(request.corpus_path)):
            # Every pass re-reads the file
            corpus = CorpusStream(lambda: self.embedding_repository.read_corpus(request.corpus_path))
            table = self.embedding_service.train(corpus, request.config)
            self.embedding_repository.save(table, request.output_path)
            logfire.info("Embeddings written", path=str(request.output_path))
            return TrainEmbeddingsResponse(
                output_path=request.output_path,
                vocabulary_size=table.vocabulary.size,
                dim=table.dim,
                buckets=table.bucket_count,
                lines=corpus.line_count,
                tokens=corpus.token_count,
            )
