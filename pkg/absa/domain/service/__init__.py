"""Domain services."""

from .base import Service
from .comparison_service import ComparisonService
from .corpus_service import CorpusService, filter_conflicts
from .embedding_service import (
    CorpusStream,
    EmbeddingService,
    NegativeSampler,
    SkipGramConfig,
    build_vocabulary,
    skipgram_pairs,
    train_subword_skipgram,
)
from .evaluation_service import EvaluationService, MajorityBaseline, majority_baseline, micro_f1
from .prediction_service import PredictionService
from .reference import MAJORITY_BASELINE, reference_score
from .search_service import SearchService, random_search, sample_trials
from .training_service import Trainer, TrainingResult, dev_f1, fit_detector

__all__ = [
    "ComparisonService",
    "CorpusService",
    "CorpusStream",
    "EmbeddingService",
    "EvaluationService",
    "MAJORITY_BASELINE",
    "MajorityBaseline",
    "NegativeSampler",
    "PredictionService",
    "SearchService",
    "Service",
    "SkipGramConfig",
    "Trainer",
    "TrainingResult",
    "build_vocabulary",
    "dev_f1",
    "filter_conflicts",
    "fit_detector",
    "majority_baseline",
    "micro_f1",
    "random_search",
    "reference_score",
    "sample_trials",
    "skipgram_pairs",
    "train_subword_skipgram",
]
