"""In-memory implementation of the model repository for testing."""

from copy import deepcopy
from pathlib import Path

import numpy as np

from absa.domain.error import CatalogMismatchError
from absa.domain.network import LogisticAspectDetector, ModelBundle
from absa.domain.repository import ModelRepository
from absa.domain.value import AspectCatalog
from absa.persistence.error import ArtifactNotFoundError


class InMemoryModelRepository(ModelRepository):
    """Bundles and detector arrays keyed by path."""

    def __init__(self) -> None:
        self._models: dict[Path, ModelBundle] = {}
        self._detectors: dict[Path, tuple[str, dict[str, np.ndarray]]] = {}

    def save(self, bundle: ModelBundle, path: Path) -> None:
        self._models[path] = deepcopy(bundle)

    def load(self, path: Path, catalog: AspectCatalog | None = None) -> ModelBundle:
        bundle = self._models.get(path)
        if bundle is None:
            raise ArtifactNotFoundError(path, "Model file")
        if catalog is not None and catalog.fingerprint != bundle.catalog.fingerprint:
            raise CatalogMismatchError(bundle.catalog.fingerprint, catalog.fingerprint)
        return deepcopy(bundle)

    def save_detector(self, detector: LogisticAspectDetector, catalog: AspectCatalog, path: Path) -> None:
        self._detectors[path] = (catalog.fingerprint, {k: v.copy() for k, v in detector.arrays().items()})

    def load_detector(self, path: Path, catalog: AspectCatalog) -> dict[str, np.ndarray]:
        if path not in self._detectors:
            raise ArtifactNotFoundError(path, "Detector file")
        fingerprint, arrays = self._detectors[path]
        if fingerprint != catalog.fingerprint:
            raise CatalogMismatchError(fingerprint, catalog.fingerprint)
        return {k: v.copy() for k, v in arrays.items()}
