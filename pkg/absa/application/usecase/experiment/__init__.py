"""Experiment-level use cases."""

from .baseline import BaselineRequest, BaselineResponse, BaselineUseCase
from .compare import CompareRequest, CompareResponse, CompareUseCase

__all__ = [
    "BaselineRequest",
    "BaselineResponse",
    "BaselineUseCase",
    "CompareRequest",
    "CompareResponse",
    "CompareUseCase",
]
