"""Application layer DI providers."""

from dishka import Scope, provide

from absa.application.usecase import ExperimentLoader
from absa.application.usecase.embedding import TrainEmbeddingsUseCase
from absa.application.usecase.experiment import BaselineUseCase, CompareUseCase
from absa.application.usecase.model import (
    EvaluateModelUseCase,
    PredictDocumentsUseCase,
    PredictStreamUseCase,
    TrainModelUseCase,
    TuneModelUseCase,
)
from absa.config import Settings
from absa.domain.repository import (
    ArtifactRepository,
    CatalogRepository,
    DatasetRepository,
    EmbeddingRepository,
    ModelRepository,
)
from absa.domain.service import (
    ComparisonService,
    CorpusService,
    EmbeddingService,
    EvaluationService,
    PredictionService,
    SearchService,
    Trainer,
)
from absa.util.di.base import ProviderBase


class ProdApplicationProvider(ProviderBase):
    """Production application use cases provider - concrete, no mocks needed."""

    scope = Scope.REQUEST

    @provide
    def get_experiment_loader(
        self,
        dataset_repository: DatasetRepository,
        catalog_repository: CatalogRepository,
        embedding_repository: EmbeddingRepository,
        corpus_service: CorpusService,
    ) -> ExperimentLoader:
        """Provide experiment input loader."""
        return ExperimentLoader(
            dataset_repository=dataset_repository,
            catalog_repository=catalog_repository,
            embedding_repository=embedding_repository,
            corpus_service=corpus_service,
        )

    # Embedding use cases
    @provide
    def get_train_embeddings_use_case(
        self, embedding_repository: EmbeddingRepository, embedding_service: EmbeddingService
    ) -> TrainEmbeddingsUseCase:
        """Provide train embeddings use case."""
        return TrainEmbeddingsUseCase(
            embedding_repository=embedding_repository, embedding_service=embedding_service
        )

    # Model use cases
    @provide
    def get_train_model_use_case(
        self,
        loader: ExperimentLoader,
        trainer: Trainer,
        evaluation_service: EvaluationService,
        model_repository: ModelRepository,
        artifact_repository: ArtifactRepository,
        settings: Settings,
    ) -> TrainModelUseCase:
        """Provide train model use case."""
        return TrainModelUseCase(
            loader=loader,
            trainer=trainer,
            evaluation_service=evaluation_service,
            model_repository=model_repository,
            artifact_repository=artifact_repository,
            settings=settings,
        )

    @provide
    def get_tune_model_use_case(
        self,
        loader: ExperimentLoader,
        trainer: Trainer,
        search_service: SearchService,
        artifact_repository: ArtifactRepository,
        settings: Settings,
    ) -> TuneModelUseCase:
        """Provide tune model use case."""
        return TuneModelUseCase(
            loader=loader,
            trainer=trainer,
            search_service=search_service,
            artifact_repository=artifact_repository,
            settings=settings,
        )

    @provide
    def get_evaluate_model_use_case(
        self,
        model_repository: ModelRepository,
        dataset_repository: DatasetRepository,
        catalog_repository: CatalogRepository,
        corpus_service: CorpusService,
        evaluation_service: EvaluationService,
    ) -> EvaluateModelUseCase:
        """Provide evaluate model use case."""
        return EvaluateModelUseCase(
            model_repository=model_repository,
            dataset_repository=dataset_repository,
            catalog_repository=catalog_repository,
            corpus_service=corpus_service,
            evaluation_service=evaluation_service,
        )

    @provide
    def get_predict_stream_use_case(self, model_repository: ModelRepository) -> PredictStreamUseCase:
        """Provide streaming predict use case."""
        return PredictStreamUseCase(model_repository=model_repository)

    @provide
    def get_predict_documents_use_case(
        self, prediction_service: PredictionService
    ) -> PredictDocumentsUseCase:
        """Provide batch predict use case for the HTTP server."""
        return PredictDocumentsUseCase(prediction_service=prediction_service)

    # Experiment use cases
    @provide
    def get_compare_use_case(
        self,
        loader: ExperimentLoader,
        trainer: Trainer,
        comparison_service: ComparisonService,
        artifact_repository: ArtifactRepository,
        settings: Settings,
    ) -> CompareUseCase:
        """Provide compare use case."""
        return CompareUseCase(
            loader=loader,
            trainer=trainer,
            comparison_service=comparison_service,
            artifact_repository=artifact_repository,
            settings=settings,
        )

    @provide
    def get_baseline_use_case(
        self,
        loader: ExperimentLoader,
        evaluation_service: EvaluationService,
        artifact_repository: ArtifactRepository,
    ) -> BaselineUseCase:
        """Provide baseline use case."""
        return BaselineUseCase(
            loader=loader,
            evaluation_service=evaluation_service,
            artifact_repository=artifact_repository,
        )
