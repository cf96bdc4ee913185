"""In-memory implementation of the dataset repository for testing."""

from collections.abc import Sequence
from copy import deepcopy
from pathlib import Path

from absa.domain.model import Document
from absa.domain.repository import DatasetRepository
from absa.domain.value import AspectCatalog, Split
from absa.persistence.error import ArtifactNotFoundError


class InMemoryDatasetRepository(DatasetRepository):
    """Splits keyed by (dataset directory, split)."""

    def __init__(self) -> None:
        self._splits: dict[tuple[Path, Split], list[Document]] = {}

    def available_splits(self, dataset: Path) -> list[Split]:
        present = [split for split in Split if (dataset, split) in self._splits]
        if not present:
            raise ArtifactNotFoundError(dataset, "Dataset directory")
        return present

    def load_split(self, dataset: Path, split: Split, catalog: AspectCatalog) -> list[Document]:
        documents = self._splits.get((dataset, split))
        if documents is None:
            raise ArtifactNotFoundError(dataset / f"{split.value}.tsv", f"Split {split.value!r}")
        for doc in documents:
            for aspect in doc.label_sets:
                catalog.index(aspect)
        return deepcopy(documents)

    def save_split(self, dataset: Path, split: Split, documents: Sequence[Document]) -> None:
        self._splits[(dataset, split)] = deepcopy(list(documents))
