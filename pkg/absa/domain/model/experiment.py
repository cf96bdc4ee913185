"""Hyperparameters and experiment definitions."""

import itertools
from pathlib import Path

from pydantic import Field, field_validator

from absa.domain.model.common import DomainModel
from absa.domain.value import Architecture, EmbeddingSource


class HyperConfig(DomainModel):
    """Everything that determines one training run besides the data."""

    architecture: Architecture
    learning_rate: float = Field(gt=0)
    batch_size: int = Field(ge=1)
    epochs: int = Field(default=200, ge=0)
    patience: int = Field(default=10, ge=1)
    seed: int = 42
    # None disables clipping
    clip_norm: float | None = Field(default=None, gt=0)
    dropout: float = Field(default=0.5, ge=0.0, lt=1.0)
    embedding_source: EmbeddingSource = EmbeddingSource.OTHER


class SearchSpace(DomainModel):
    """Candidate learning rates and batch sizes for random search."""

    learning_rates: tuple[float, ...] = (0.001, 0.003, 0.01, 0.03, 0.1)
    batch_sizes: tuple[int, ...] = (5, 10, 20)
    trials: int = Field(default=15, ge=1)

    @field_validator("learning_rates", "batch_sizes")
    @classmethod
    def validate_candidates(cls, v: tuple) -> tuple:
        if not v:
            raise ValueError("Search candidates must not be empty")
        if len(set(v)) != len(v):
            raise ValueError("Search candidates must be unique")
        if any(c <= 0 for c in v):
            raise ValueError("Search candidates must be positive")
        return v

    @property
    def size(self) -> int:
        return len(self.learning_rates) * len(self.batch_sizes)

    def cells(self) -> list[tuple[float, int]]:
        """Product space, learning rate major."""
        return list(itertools.product(self.learning_rates, self.batch_sizes))


class ExperimentConfig(DomainModel):
    """Resolved inputs and outputs of one experiment."""

    dataset_dir: Path
    embeddings_path: Path
    output_dir: Path
    catalog_path: Path | None = None
    hyper: HyperConfig

    @property
    def architecture(self) -> Architecture:
        return self.hyper.architecture

    @property
    def seed(self) -> int:
        return self.hyper.seed


class NetworkConfig(DomainModel):
    """Layer sizes of a network; the embedding dimension comes from the table."""

    embedding_dim: int = Field(ge=1)
    filter_widths: tuple[int, ...] = (3, 4, 5)
    filters: int = Field(default=300, ge=1)
    hidden_size: int = Field(default=200, ge=1)
    aspect_embedding_dim: int = Field(default=15, ge=1)
    dropout: float = Field(default=0.5, ge=0.0, lt=1.0)
    init_scale: float = Field(default=0.05, gt=0)

    @field_validator("filter_widths")
    @classmethod
    def validate_widths(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if not v or any(w < 1 for w in v):
            raise ValueError("Filter widths must be positive and non-empty")
        return v

    @property
    def max_width(self) -> int:
        return max(self.filter_widths)


class DetectorConfig(DomainModel):
    """Training of the pipeline aspect detector."""

    epochs: int = Field(default=50, ge=0)
    learning_rate: float = Field(default=0.5, gt=0)
    l2: float = Field(default=0.0, ge=0)
