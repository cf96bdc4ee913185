"""Application use cases."""

from .base import BaseUseCase
from .workspace import ExperimentData, ExperimentLoader

__all__ = ["BaseUseCase", "ExperimentData", "ExperimentLoader"]
