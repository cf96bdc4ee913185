"""Domain models."""

from absa.domain.model.document import ConflictReport, Document
from absa.domain.model.embedding import EmbeddingTable, Vocabulary, fallback_vector
from absa.domain.model.experiment import (
    DetectorConfig,
    ExperimentConfig,
    HyperConfig,
    NetworkConfig,
    SearchSpace,
)
from absa.domain.model.prediction import (
    AspectPrediction,
    PredictedAspect,
    PredictionRecord,
    PredictionSet,
)
from absa.domain.model.report import (
    ComparisonRow,
    ComparisonTable,
    EpochRecord,
    EvalReport,
    TrainHistory,
    TrialRecord,
)

__all__ = [
    "AspectPrediction",
    "ComparisonRow",
    "ComparisonTable",
    "ConflictReport",
    "Document",
    "EmbeddingTable",
    "DetectorConfig",
    "EpochRecord",
    "EvalReport",
    "ExperimentConfig",
    "HyperConfig",
    "NetworkConfig",
    "PredictedAspect",
    "PredictionRecord",
    "PredictionSet",
    "SearchSpace",
    "TrainHistory",
    "TrialRecord",
    "Vocabulary",
    "fallback_vector",
]
