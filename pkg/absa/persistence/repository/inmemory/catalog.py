"""In-memory implementation of the catalog repository for testing."""

from pathlib import Path

from absa.domain.repository import CatalogRepository
from absa.domain.value import AspectCatalog
from absa.persistence.error import ArtifactNotFoundError


class InMemoryCatalogRepository(CatalogRepository):
    def __init__(self) -> None:
        self._catalogs: dict[Path, AspectCatalog] = {}

    def load(self, path: Path | None) -> AspectCatalog:
        if path is None:
            return AspectCatalog.default()
        catalog = self._catalogs.get(path)
        if catalog is None:
            raise ArtifactNotFoundError(path, "Aspect catalog")
        return catalog

    def save(self, catalog: AspectCatalog, path: Path) -> None:
        self._catalogs[path] = catalog
