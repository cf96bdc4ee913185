"""Embedding use cases."""

from .train_embeddings import TrainEmbeddingsRequest, TrainEmbeddingsResponse, TrainEmbeddingsUseCase

__all__ = ["TrainEmbeddingsRequest", "TrainEmbeddingsResponse", "TrainEmbeddingsUseCase"]
