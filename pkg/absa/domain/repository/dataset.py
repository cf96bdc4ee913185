"""Dataset repository interface."""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from pathlib import Path

from absa.domain.model import Document
from absa.domain.value import AspectCatalog, Split


class DatasetRepository(ABC):
    """Reads and writes dataset splits.

    A dataset is addressed by its directory; each split is one file in it.
    """

    @abstractmethod
    def available_splits(self, dataset: Path) -> list[Split]:
        """Splits present in the dataset, in canonical order."""
        pass

    @abstractmethod
    def load_split(self, dataset: Path, split: Split, catalog: AspectCatalog) -> list[Document]:
        """Parse one split.

        Raises:
            ArtifactNotFoundError: If the split does not exist
            ParseError: If the split file is malformed
        """
        pass

    @abstractmethod
    def save_split(self, dataset: Path, split: Split, documents: Sequence[Document]) -> None:
        pass
