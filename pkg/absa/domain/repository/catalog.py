"""Aspect catalog repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path

from absa.domain.value import AspectCatalog


class CatalogRepository(ABC):
    """Loads aspect catalogs; no path means the bundled default."""

    @abstractmethod
    def load(self, path: Path | None) -> AspectCatalog:
        pass

    @abstractmethod
    def save(self, catalog: AspectCatalog, path: Path) -> None:
        pass
