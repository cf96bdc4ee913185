"""File-backed model repository."""

from pathlib import Path

import logfire
import numpy as np

from absa.domain.network import LogisticAspectDetector, ModelBundle
from absa.domain.repository import ModelRepository
from absa.domain.value import AspectCatalog
from absa.persistence import model_store


class FileModelRepository(ModelRepository):
    """Models in the zip container of ``absa.persistence.model_store``."""

    def save(self, bundle: ModelBundle, path: Path) -> None:
        with logfire.span("model_repository.save", path=str(path), architecture=bundle.architecture.value):
            model_store.save_model(bundle, path)

    def load(self, path: Path, catalog: AspectCatalog | None = None) -> ModelBundle:
        with logfire.span("model_repository.load", path=str(path)):
            bundle = model_store.load_model(path, catalog)
            logfire.info(
                "Model loaded",
                architecture=bundle.architecture.value,
                catalog=bundle.catalog.fingerprint[:12],
                parameters=bundle.network.params.count,
            )
            return bundle

    def save_detector(self, detector: LogisticAspectDetector, catalog: AspectCatalog, path: Path) -> None:
        model_store.save_detector(detector, catalog, path)

    def load_detector(self, path: Path, catalog: AspectCatalog) -> dict[str, np.ndarray]:
        return model_store.load_detector_arrays(path, catalog)
