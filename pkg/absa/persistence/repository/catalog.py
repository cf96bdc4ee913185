"""File-backed aspect catalog repository."""

from pathlib import Path

from absa.domain.repository import CatalogRepository
from absa.domain.value import AspectCatalog
from absa.persistence.dataset import format_catalog, parse_catalog
from absa.persistence.error import ArtifactNotFoundError, reading
from absa.persistence.reports import write_text


class FileCatalogRepository(CatalogRepository):
    """Catalog files with one aspect name per line."""

    def load(self, path: Path | None) -> AspectCatalog:
        if path is None:
            return AspectCatalog.default()
        if not path.is_file():
            raise ArtifactNotFoundError(path, "Aspect catalog")
        with reading(path), path.open(encoding="utf-8") as f:
            return parse_catalog(f, str(path))

    def save(self, catalog: AspectCatalog, path: Path) -> None:
        write_text(path, format_catalog(catalog))
