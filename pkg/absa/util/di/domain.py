"""Domain layer DI providers."""

from dishka import Scope, provide

from absa.config import Settings
from absa.domain.service import (
    ComparisonService,
    CorpusService,
    EmbeddingService,
    EvaluationService,
    SearchService,
    Trainer,
)
from absa.util.di.base import ProviderBase


class ProdDomainProvider(ProviderBase):
    """Production domain services provider - concrete, no mocks needed.

    Services hold no state between calls; one set per command or request.
    """

    scope = Scope.REQUEST

    @provide
    def get_corpus_service(self) -> CorpusService:
        """Provide corpus preparation service."""
        return CorpusService()

    @provide
    def get_embedding_service(self) -> EmbeddingService:
        """Provide skip-gram embedding service."""
        return EmbeddingService()

    @provide
    def get_trainer(self, settings: Settings) -> Trainer:
        """Provide training loop."""
        return Trainer(record_wall_clock=settings.training.record_wall_clock)

    @provide
    def get_evaluation_service(self) -> EvaluationService:
        """Provide evaluation service."""
        return EvaluationService()

    @provide
    def get_search_service(self) -> SearchService:
        """Provide hyperparameter search service."""
        return SearchService()

    @provide
    def get_comparison_service(self, evaluation_service: EvaluationService) -> ComparisonService:
        """Provide architecture comparison service."""
        return ComparisonService(evaluation_service=evaluation_service)
