"""File-backed artifact repository."""

from pathlib import Path

from absa.domain.repository import ArtifactRepository
from absa.persistence import reports
from absa.persistence.error import ArtifactNotFoundError, reading


class FileArtifactRepository(ArtifactRepository):
    """UTF-8 text files with LF line endings."""

    def write_text(self, path: Path, content: str) -> None:
        reports.write_text(path, content)

    def read_text(self, path: Path) -> str:
        if not path.is_file():
            raise ArtifactNotFoundError(path)
        with reading(path):
            return path.read_text(encoding="utf-8")
