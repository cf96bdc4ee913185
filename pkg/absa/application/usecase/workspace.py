"""Experiment inputs shared by the training, tuning and comparison use cases."""

from dataclasses import dataclass, field
from pathlib import Path

import logfire
import numpy as np

from absa.config import Settings
from absa.domain.error import InvalidConfigurationError
from absa.domain.model import (
    ConflictReport,
    DetectorConfig,
    Document,
    EmbeddingTable,
    HyperConfig,
    NetworkConfig,
    SearchSpace,
)
from absa.domain.network import LogisticAspectDetector, ModelBundle, Network, PipelineNetwork, build_network
from absa.domain.repository import CatalogRepository, DatasetRepository, EmbeddingRepository
from absa.domain.service import CorpusService, SkipGramConfig, Trainer, TrainingResult
from absa.domain.value import Architecture, AspectCatalog, EmbeddingSource, EncoderKind, Split

# Per encoder family: (learning rate, batch size)
DEFAULT_HYPER = {
    EncoderKind.CNN: (0.03, 5),
    EncoderKind.LSTM: (0.01, 10),
}


def hyper_config(
    settings: Settings,
    architecture: Architecture,
    embedding_source: EmbeddingSource = EmbeddingSource.OTHER,
    seed: int | None = None,
) -> HyperConfig:
    """Training hyperparameters for an architecture, falling back to its family defaults."""
    training = settings.training
    default_lr, default_bs = DEFAULT_HYPER[architecture.encoder]
    clip = training.clip_lstm if architecture.encoder is EncoderKind.LSTM else training.clip_cnn
    return HyperConfig(
        architecture=architecture,
        learning_rate=training.learning_rate or default_lr,
        batch_size=training.batch_size or default_bs,
        epochs=training.epochs,
        patience=training.patience,
        seed=settings.seed if seed is None else seed,
        clip_norm=training.clip_norm if clip else None,
        dropout=settings.network.dropout,
        embedding_source=embedding_source,
    )


def network_config(settings: Settings, embedding_dim: int, dropout: float | None = None) -> NetworkConfig:
    net = settings.network
    return NetworkConfig(
        embedding_dim=embedding_dim,
        filter_widths=net.filter_widths,
        filters=net.filters,
        hidden_size=net.hidden_size,
        aspect_embedding_dim=net.aspect_embedding_dim,
        dropout=net.dropout if dropout is None else dropout,
        init_scale=net.init_scale,
    )


def detector_config(settings: Settings) -> DetectorConfig:
    return DetectorConfig(
        epochs=settings.detector.epochs,
        learning_rate=settings.detector.learning_rate,
        l2=settings.detector.l2,
    )


def search_space(settings: Settings) -> SearchSpace:
    return SearchSpace(
        learning_rates=settings.search.learning_rates,
        batch_sizes=settings.search.batch_sizes,
        trials=settings.search.trials,
    )


def skipgram_config(settings: Settings) -> SkipGramConfig:
    emb = settings.embedding
    return SkipGramConfig(
        dim=emb.dim,
        window=emb.window,
        negatives=emb.negatives,
        epochs=emb.epochs,
        learning_rate=emb.learning_rate,
        min_count=emb.min_count,
        min_n=emb.min_n,
        max_n=emb.max_n,
        buckets=emb.buckets,
        seed=settings.seed,
    )


@dataclass
class ExperimentData:
    """Parsed splits of one dataset; ``train`` is conflict-filtered."""

    catalog: AspectCatalog
    train: list[Document]
    dev: list[Document]
    conflicts: ConflictReport
    tests: dict[Split, list[Document]] = field(default_factory=dict)
    table: EmbeddingTable | None = None

    @property
    def training_tokens(self) -> list[str]:
        return [token for doc in self.train for token in doc.tokens]

    def evaluation_splits(self) -> dict[Split, list[Document]]:
        """Dev and test splits in canonical order, empty ones skipped."""
        splits = {Split.DEV: self.dev, **self.tests}
        return {split: docs for split, docs in splits.items() if docs}


class ExperimentLoader:
    """Loads catalog, splits and embeddings for an experiment."""

    def __init__(
        self,
        dataset_repository: DatasetRepository,
        catalog_repository: CatalogRepository,
        embedding_repository: EmbeddingRepository,
        corpus_service: CorpusService,
    ):
        self.dataset_repository = dataset_repository
        self.catalog_repository = catalog_repository
        self.embedding_repository = embedding_repository
        self.corpus_service = corpus_service

    def load(
        self,
        dataset_dir: Path,
        catalog_path: Path | None,
        embeddings_path: Path | None = None,
        expected_dim: int | None = None,
    ) -> ExperimentData:
        """Parse every available split.

        Raises:
            ArtifactNotFoundError: If the dataset, a required split or the embeddings are missing
        """
        with logfire.span("experiment.load", dataset=str(dataset_dir)):
            catalog = self.catalog_repository.load(catalog_path)
            available = self.dataset_repository.available_splits(dataset_dir)
            if Split.TRAIN not in available:
                # Raises ArtifactNotFoundError naming the train file
                self.dataset_repository.load_split(dataset_dir, Split.TRAIN, catalog)

            def split(name: Split) -> list[Document]:
                if name not in available:
                    return []
                return self.dataset_repository.load_split(dataset_dir, name, catalog)

            train, conflicts = self.corpus_service.prepare_training(split(Split.TRAIN))
            dev = self.corpus_service.prepare_evaluation(split(Split.DEV))
            tests = {
                name: self.corpus_service.prepare_evaluation(split(name))
                for name in (Split.TEST_SYN, Split.TEST_DIA)
                if name in available
            }
            table = None
            if embeddings_path is not None:
                table = self.embedding_repository.load(embeddings_path, expected_dim)
            return ExperimentData(
                catalog=catalog, train=train, dev=dev, conflicts=conflicts, tests=tests, table=table
            )


def attach_detector(network: Network, arrays: dict[str, np.ndarray]) -> None:
    """Install a previously trained detector on a pipeline network."""
    if isinstance(network, PipelineNetwork):
        detector = LogisticAspectDetector(network.catalog.size, network.embedding.mean_vector)
        detector.load(arrays)
        network.detector = detector


def train_bundle(
    data: ExperimentData,
    hyper: HyperConfig,
    settings: Settings,
    trainer: Trainer,
    detector_arrays: dict[str, np.ndarray] | None = None,
) -> tuple[ModelBundle, TrainingResult]:
    """Build a fresh network for ``hyper`` and train it on ``data``.

    Pipeline networks get a freshly fitted detector unless ``detector_arrays``
    holds a previously trained one.

    Raises:
        InvalidConfigurationError: If no embedding table was loaded
        TrainingDivergedError: If training produces a non-finite loss
    """
    if data.table is None:
        raise InvalidConfigurationError("Training needs an embedding table")
    config = network_config(settings, data.table.dim, hyper.dropout)
    network = build_network(hyper.architecture, data.catalog, data.table, data.training_tokens, config, hyper.seed)
    detector = detector_config(settings) if detector_arrays is None else None
    result = trainer.train(network, data.train, data.dev, hyper, detector)
    if detector_arrays is not None:
        attach_detector(network, detector_arrays)
    return ModelBundle(network=network, embedding_source=hyper.embedding_source, hyper=hyper), result
