"""Serving DI provider: the model shared by all HTTP requests."""

import logfire
from dishka import Scope, provide

from absa.config import Settings
from absa.domain.repository import ModelRepository
from absa.domain.service import PredictionService
from absa.util.di.base import ProviderBase
from absa.util.error import ConfigurationError


class ProdServingProvider(ProviderBase):
    """Loads the served model once per container."""

    @provide(scope=Scope.APP)
    def get_prediction_service(self, settings: Settings, model_repository: ModelRepository) -> PredictionService:
        """Provide prediction service over the configured model.

        Raises:
            ConfigurationError: If no model path is configured
        """
        if settings.serve.model_path is None:
            raise ConfigurationError("serve.model_path", "no model configured for serving")
        bundle = model_repository.load(settings.serve.model_path)
        logfire.info(
            "Serving model",
            architecture=bundle.architecture.value,
            catalog=bundle.catalog.fingerprint[:12],
        )
        return PredictionService(bundle)
