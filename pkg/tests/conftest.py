"""Test configuration and fixtures.

The synthetic corpus is built so a small model can learn it: every aspect
has a trigger token and every polarity a cue token that follows it
("zug gut" is Zugfahrt:positive). Filler tokens carry no signal.
"""

from pathlib import Path

import logfire
import numpy as np
import pytest

from absa.application.usecase.workspace import network_config
from absa.config import (
    DetectorSettings,
    EmbeddingSettings,
    NetworkSettings,
    ObservabilitySettings,
    SearchSettings,
    Settings,
    TrainingSettings,
)
from absa.domain.model import Document, EmbeddingTable, Vocabulary
from absa.domain.network import Network, build_network
from absa.domain.repository import CatalogRepository, DatasetRepository, EmbeddingRepository
from absa.domain.text import tokenize
from absa.domain.value import Architecture, AspectCatalog, Polarity, Split
from absa.persistence.dataset import format_catalog, split_path, write_dataset
from absa.persistence.embedding_file import save_embeddings

TOY_DIM = 8
TOY_BUCKETS = 64

ASPECTS = ("Zugfahrt", "Service", "Ticketkauf")
TRIGGERS = {"Zugfahrt": "zug", "Service": "personal", "Ticketkauf": "ticket"}
CUES = {Polarity.POSITIVE: "gut", Polarity.NEGATIVE: "schlecht", Polarity.NEUTRAL: "normal"}
FILLER = ("heute", "wieder", "mal", "die", "bahn", "echt", "und", "so")

SPLIT_SIZES = {Split.TRAIN: 32, Split.DEV: 12, Split.TEST_SYN: 8, Split.TEST_DIA: 8}


@pytest.fixture(scope="session", autouse=True)
def quiet_logfire():
    """Logfire without console output or exporting."""
    logfire.configure(send_to_logfire=False, console=False)


def make_document(
    doc_id: str,
    text: str,
    labels: dict[str, Polarity | tuple[Polarity, ...]] | None = None,
    split: Split = Split.TRAIN,
) -> Document:
    """Document with tokens derived from ``text``.

    A tuple of polarities marks a conflicted aspect.
    """
    label_sets = {
        aspect: value if isinstance(value, tuple) else (value,)
        for aspect, value in (labels or {}).items()
    }
    return Document(id=doc_id, text=text, tokens=tuple(tokenize(text)), label_sets=label_sets, split=split)


def synthetic_documents(
    split: Split,
    count: int,
    seed: int = 0,
    conflicts: int = 0,
) -> list[Document]:
    """Trigger-token documents with one or two aspects each.

    The first ``conflicts`` documents annotate their first aspect twice with
    different polarities.
    """
    rng = np.random.default_rng(seed)
    polarities = list(CUES)
    documents = []
    for i in range(count):
        k = 1 if i % 3 else 2
        aspects = [ASPECTS[j] for j in sorted(rng.choice(len(ASPECTS), size=k, replace=False))]
        words: list[str] = [str(w) for w in rng.choice(FILLER, size=2)]
        labels: dict[str, Polarity | tuple[Polarity, ...]] = {}
        for aspect in aspects:
            polarity = polarities[int(rng.integers(len(polarities)))]
            words.extend([TRIGGERS[aspect], CUES[polarity], str(rng.choice(FILLER))])
            labels[aspect] = polarity
        if i < conflicts:
            first = aspects[0]
            original = labels[first]
            assert isinstance(original, Polarity)
            other = polarities[(polarities.index(original) + 1) % len(polarities)]
            labels[first] = (original, other)
        documents.append(make_document(f"{split.value}-{i + 1}", " ".join(words), labels, split))
    return documents


def synthetic_splits() -> dict[Split, list[Document]]:
    """All four splits; one training document in 25 is conflicted."""
    return {
        split: synthetic_documents(
            split,
            size,
            seed=index,
            conflicts=size // 25 if split is Split.TRAIN else 0,
        )
        for index, (split, size) in enumerate(SPLIT_SIZES.items())
    }


def toy_table(dim: int = TOY_DIM, buckets: int | None = TOY_BUCKETS, seed: int = 7) -> EmbeddingTable:
    """Random vectors for every synthetic token; ``buckets=None`` drops subword rows."""
    rng = np.random.default_rng(seed)
    tokens = sorted({*TRIGGERS.values(), *CUES.values(), *FILLER})
    return EmbeddingTable(
        vocabulary=Vocabulary(tokens=tuple(tokens)),
        words=rng.normal(0.0, 0.5, size=(len(tokens), dim)),
        buckets=None if buckets is None else rng.normal(0.0, 0.1, size=(buckets, dim)),
        min_n=3,
        max_n=4,
    )


def toy_settings(**overrides) -> Settings:
    """Small layer sizes and short training so tests finish quickly."""
    values = {
        "environment": "test",
        "seed": 42,
        "embedding": EmbeddingSettings(
            dim=TOY_DIM, buckets=TOY_BUCKETS, min_n=3, max_n=4, epochs=2, min_count=1, window=2, negatives=2
        ),
        "network": NetworkSettings(filter_widths=(1, 2), filters=6, hidden_size=5, aspect_embedding_dim=3, dropout=0.1),
        "training": TrainingSettings(epochs=6, patience=3, learning_rate=0.2, batch_size=4),
        "search": SearchSettings(learning_rates=(0.1, 0.3), batch_sizes=(2, 4), trials=3),
        "detector": DetectorSettings(epochs=200, learning_rate=1.0),
        "observability": ObservabilitySettings(console=False, send_to_logfire=False),
    }
    values.update(overrides)
    return Settings(**values)


def write_synthetic_dataset(directory: Path, splits: dict[Split, list[Document]] | None = None) -> Path:
    """Dataset directory with one TSV per split."""
    for split, documents in (splits or synthetic_splits()).items():
        write_dataset(documents, split_path(directory, split))
    return directory


def write_catalog(path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_catalog(toy_catalog()), encoding="utf-8")
    return path


def toy_catalog() -> AspectCatalog:
    return AspectCatalog(names=ASPECTS)


@pytest.fixture
def settings() -> Settings:
    return toy_settings()


@pytest.fixture
def catalog() -> AspectCatalog:
    return toy_catalog()


@pytest.fixture
def splits() -> dict[Split, list[Document]]:
    return synthetic_splits()


@pytest.fixture
def table() -> EmbeddingTable:
    return toy_table()


@pytest.fixture
def workspace(tmp_path: Path) -> dict[str, Path]:
    """Dataset, catalog and embedding files on disk."""
    dataset = write_synthetic_dataset(tmp_path / "data")
    catalog_path = write_catalog(tmp_path / "catalog.txt")
    embeddings = tmp_path / "vectors.txt"
    save_embeddings(toy_table(), embeddings)
    return {
        "root": tmp_path,
        "dataset": dataset,
        "catalog": catalog_path,
        "embeddings": embeddings,
    }


def toy_network(
    architecture: Architecture,
    table: EmbeddingTable | None = None,
    seed: int = 0,
    dropout: float = 0.0,
) -> Network:
    """Untrained network over the synthetic training vocabulary."""
    table = table or toy_table()
    train = synthetic_splits()[Split.TRAIN]
    config = network_config(toy_settings(), table.dim, dropout)
    tokens = [token for doc in train for token in doc.tokens]
    return build_network(architecture, toy_catalog(), table, tokens, config, seed)


# Paths under which unit tests seed the in-memory repositories
DATASET_DIR = Path("/data/germeval")
CATALOG_PATH = Path("/data/catalog.txt")
EMBEDDINGS_PATH = Path("/data/vectors.txt")
OUTPUT_DIR = Path("/runs/experiment")


def seed_repositories(env, splits: dict[Split, list[Document]] | None = None) -> None:
    """Synthetic splits, the toy catalog and the toy table in the in-memory repositories."""
    datasets = env.get(DatasetRepository)
    for split, documents in (splits or synthetic_splits()).items():
        datasets.save_split(DATASET_DIR, split, documents)
    env.get(CatalogRepository).save(toy_catalog(), CATALOG_PATH)
    env.get(EmbeddingRepository).save(toy_table(), EMBEDDINGS_PATH)
