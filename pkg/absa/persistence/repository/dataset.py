"""File-backed dataset repository."""

from collections.abc import Sequence
from pathlib import Path

import logfire

from absa.domain.model import Document
from absa.domain.repository import DatasetRepository
from absa.domain.value import AspectCatalog, Split
from absa.persistence.dataset import parse_dataset, split_path, write_dataset
from absa.persistence.error import ArtifactNotFoundError, reading


class FileDatasetRepository(DatasetRepository):
    """Dataset directories with one TSV file per split."""

    def available_splits(self, dataset: Path) -> list[Split]:
        if not dataset.is_dir():
            raise ArtifactNotFoundError(dataset, "Dataset directory")
        return [split for split in Split if split_path(dataset, split).is_file()]

    def load_split(self, dataset: Path, split: Split, catalog: AspectCatalog) -> list[Document]:
        path = split_path(dataset, split)
        if not path.is_file():
            raise ArtifactNotFoundError(path, f"Split {split.value!r}")
        with logfire.span("dataset_repository.load_split", path=str(path), split=split.value):
            with reading(path), path.open(encoding="utf-8") as f:
                documents = parse_dataset(f, catalog, split, str(path))
            logfire.info("Split loaded", split=split.value, documents=len(documents))
            return documents

    def save_split(self, dataset: Path, split: Split, documents: Sequence[Document]) -> None:
        write_dataset(documents, split_path(dataset, split))
