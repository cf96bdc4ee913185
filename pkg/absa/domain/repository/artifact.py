"""Artifact repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path


class ArtifactRepository(ABC):
    """Writes experiment outputs (reports, histories, logs, configs)."""

    @abstractmethod
    def write_text(self, path: Path, content: str) -> None:
        pass

    @abstractmethod
    def read_text(self, path: Path) -> str:
        """Raises ArtifactNotFoundError if the artifact does not exist."""
        pass
