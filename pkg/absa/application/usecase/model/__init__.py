"""Model use cases."""

from .evaluate_model import EvaluateModelRequest, EvaluateModelUseCase
from .predict import (
    PredictDocumentsRequest,
    PredictDocumentsResponse,
    PredictDocumentsUseCase,
    PredictStreamRequest,
    PredictStreamUseCase,
)
from .train_model import TrainModelRequest, TrainModelResponse, TrainModelUseCase
from .tune_model import TuneModelRequest, TuneModelResponse, TuneModelUseCase

__all__ = [
    "EvaluateModelRequest",
    "EvaluateModelUseCase",
    "PredictDocumentsRequest",
    "PredictDocumentsResponse",
    "PredictDocumentsUseCase",
    "PredictStreamRequest",
    "PredictStreamUseCase",
    "TrainModelRequest",
    "TrainModelResponse",
    "TrainModelUseCase",
    "TuneModelRequest",
    "TuneModelResponse",
    "TuneModelUseCase",
]
