"""Base use case."""

from abc import ABC, abstractmethod
from typing import Any


class BaseUseCase(ABC):
    """Base use case for orchestrating domain services.

    Use cases are synchronous: every command is a single-threaded
    orchestrator, and the HTTP server runs them in a thread pool.
    """

    @abstractmethod
    def execute(self, request: Any) -> Any:
        pass
