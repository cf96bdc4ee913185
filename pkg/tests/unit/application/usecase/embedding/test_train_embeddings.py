"""Unit tests for TrainEmbeddingsUseCase."""

from pathlib import Path

import pytest

from absa.application.usecase.embedding import TrainEmbeddingsRequest, TrainEmbeddingsUseCase
from absa.application.usecase.workspace import skipgram_config
from absa.domain.repository import EmbeddingRepository
from absa.persistence.error import ArtifactNotFoundError
from tests.harness import create_env_fixture

# Unit test fixture
unit_env = create_env_fixture()

CORPUS = Path("/data/tweets.txt")
OUTPUT = Path("/runs/vectors.txt")


class TestTrainEmbeddingsUseCase:
    """Tests for TrainEmbeddingsUseCase."""

    def test_trains_and_saves_table(self, unit_env, settings):
        # Arrange
        repository = unit_env.get(EmbeddingRepository)
        repository.add_corpus(CORPUS, ["Der Zug ist spät", "der zug ist voll", "Personal nett"])

        # Act
        response = unit_env.get(TrainEmbeddingsUseCase).execute(
            TrainEmbeddingsRequest(corpus_path=CORPUS, output_path=OUTPUT, config=skipgram_config(settings))
        )

        # Assert
        assert (response.dim, response.buckets) == (8, 64)
        assert response.lines == 3
        assert response.tokens == 10
        table = repository.load(OUTPUT, expected_dim=8)
        assert table.vocabulary.size == response.vocabulary_size
        assert "zug" in table.vocabulary

    def test_missing_corpus(self, unit_env, settings):
        with pytest.raises(ArtifactNotFoundError, match="Corpus not found"):
            unit_env.get(TrainEmbeddingsUseCase).execute(
                TrainEmbeddingsRequest(corpus_path=CORPUS, output_path=OUTPUT, config=skipgram_config(settings))
            )

    def test_corpus_is_streamed_again_on_every_pass(self, unit_env, settings, monkeypatch):
        """Nothing holds the corpus in memory: the vocabulary pass and each epoch re-read it."""
        # Arrange
        repository = unit_env.get(EmbeddingRepository)
        repository.add_corpus(CORPUS, ["der zug ist spät", "der zug ist voll"])
        calls = []
        read = repository.read_corpus
        monkeypatch.setattr(repository, "read_corpus", lambda path: calls.append(path) or read(path))

        # Act
        unit_env.get(TrainEmbeddingsUseCase).execute(
            TrainEmbeddingsRequest(corpus_path=CORPUS, output_path=OUTPUT, config=skipgram_config(settings))
        )

        # Assert
        assert calls == [CORPUS] * (settings.embedding.epochs + 1)
