"""In-memory implementation of the artifact repository for testing."""

from pathlib import Path

from absa.domain.repository import ArtifactRepository
from absa.persistence.error import ArtifactNotFoundError


class InMemoryArtifactRepository(ArtifactRepository):
    def __init__(self) -> None:
        self.files: dict[Path, str] = {}

    def write_text(self, path: Path, content: str) -> None:
        self.files[path] = content

    def read_text(self, path: Path) -> str:
        if path not in self.files:
            raise ArtifactNotFoundError(path)
        return self.files[path]
