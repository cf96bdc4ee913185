"""Application configuration."""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class EmbeddingSettings(BaseModel):
    """Embedding table and subword skip-gram configuration."""

    dim: int = Field(default=300, ge=1)

    # Character n-gram range and hashed bucket count for OOV composition
    min_n: int = Field(default=3, ge=1)
    max_n: int = Field(default=6, ge=1)
    buckets: int = Field(default=200_000, ge=1)

    # Skip-gram trainer
    window: int = Field(default=5, ge=1)
    negatives: int = Field(default=5, ge=1)
    epochs: int = Field(default=5, ge=1)
    learning_rate: float = Field(default=0.05, gt=0)
    min_count: int = Field(default=2, ge=1)

    # Std-dev of the per-word fallback vector used when a table has no buckets
    unknown_scale: float = 0.01


class NetworkSettings(BaseModel):
    """Encoder and head dimensions shared by all architectures."""

    filter_widths: tuple[int, ...] = (3, 4, 5)
    filters: int = Field(default=300, ge=1)
    hidden_size: int = Field(default=200, ge=1)
    aspect_embedding_dim: int = Field(default=15, ge=1)
    dropout: float = Field(default=0.5, ge=0.0, lt=1.0)
    init_scale: float = Field(default=0.05, gt=0)


class TrainingSettings(BaseModel):
    """Training loop configuration.

    Learning rate and batch size default per encoder family when left unset:
    CNN models use 0.03 / 5, LSTM models use 0.01 / 10.
    """

    learning_rate: float | None = Field(default=None, gt=0)
    batch_size: int | None = Field(default=None, ge=1)
    epochs: int = Field(default=200, ge=0)
    patience: int = Field(default=10, ge=1)

    # Global-norm gradient clipping, per encoder family
    clip_norm: float = Field(default=5.0, gt=0)
    clip_lstm: bool = True
    clip_cnn: bool = False

    # Wall-clock seconds in the history CSV break byte-identical reruns
    record_wall_clock: bool = False


class SearchSettings(BaseModel):
    """Random search over learning rate and batch size."""

    learning_rates: tuple[float, ...] = (0.001, 0.003, 0.01, 0.03, 0.1)
    batch_sizes: tuple[int, ...] = (5, 10, 20)
    trials: int = Field(default=15, ge=1)
    workers: int = Field(default=1, ge=1)


class DetectorSettings(BaseModel):
    """Stand-in aspect detector used by the pipeline architectures."""

    epochs: int = Field(default=50, ge=0)
    learning_rate: float = Field(default=0.5, gt=0)
    l2: float = Field(default=0.0, ge=0)


class ServeSettings(BaseModel):
    """HTTP prediction server configuration."""

    host: str = "127.0.0.1"
    port: int = 8000
    max_payload_bytes: int = 1024 * 1024
    model_path: Path | None = None


class ObservabilitySettings(BaseModel):
    """Observability configuration for Logfire."""

    # Logfire API token (optional - if not set, logs only go to console)
    logfire_token: str | None = None

    # If None: sends if token is present, otherwise console-only
    send_to_logfire: bool | None = None

    console: bool = True


class Settings(BaseSettings):
    """Application settings.

    Values come from defaults, then ``ABSA_``-prefixed environment variables,
    then the optional TOML file given to the CLI, then explicit CLI flags.

    Examples:
        ABSA_SEED=7
        ABSA_TRAINING__EPOCHS=50
        ABSA_NETWORK__FILTERS=100
    """

    model_config = SettingsConfigDict(
        env_prefix="ABSA_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",  # Allows ABSA_TRAINING__EPOCHS syntax
        extra="ignore",
    )

    environment: Literal["test", "development", "production"] = "development"
    debug: bool = False

    seed: int = 42

    # One aspect name per line; None uses the bundled GermEval catalog
    catalog_path: Path | None = None

    embedding: EmbeddingSettings = EmbeddingSettings()
    network: NetworkSettings = NetworkSettings()
    training: TrainingSettings = TrainingSettings()
    search: SearchSettings = SearchSettings()
    detector: DetectorSettings = DetectorSettings()
    serve: ServeSettings = ServeSettings()
    observability: ObservabilitySettings = ObservabilitySettings()
