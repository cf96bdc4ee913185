"""Persistence layer errors."""

from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path


class PersistenceError(Exception):
    """Base persistence error."""

    pass


class ArtifactNotFoundError(PersistenceError):
    """Raised when an input file or directory does not exist."""

    def __init__(self, path: Path | str, what: str = "File"):
        self.path = str(path)
        super().__init__(f"{what} not found: {path}")


class UnreadableFileError(PersistenceError):
    """Raised when a file exists but cannot be opened or decoded."""

    def __init__(self, path: Path | str, reason: str):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"Cannot read {path}: {reason}")


class ModelFormatError(PersistenceError):
    """Raised when a model container is unreadable or has an unsupported version."""

    pass


@contextmanager
def reading(path: Path) -> Iterator[None]:
    """Turn OS and decoding failures while reading ``path`` into UnreadableFileError."""
    try:
        yield
    except UnicodeDecodeError as exc:
        raise UnreadableFileError(path, f"not valid UTF-8 ({exc.reason} at byte {exc.start})") from exc
    except OSError as exc:
        raise UnreadableFileError(path, exc.strerror or str(exc)) from exc
