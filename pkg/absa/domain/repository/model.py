"""Model repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path

import numpy as np

from absa.domain.network import LogisticAspectDetector, ModelBundle
from absa.domain.value import AspectCatalog


class ModelRepository(ABC):
    """Stores trained models and standalone aspect detectors."""

    @abstractmethod
    def save(self, bundle: ModelBundle, path: Path) -> None:
        pass

    @abstractmethod
    def load(self, path: Path, catalog: AspectCatalog | None = None) -> ModelBundle:
        """Load a model.

        Raises:
            ArtifactNotFoundError: If the file does not exist
            CatalogMismatchError: If ``catalog`` differs from the training catalog
        """
        pass

    @abstractmethod
    def save_detector(self, detector: LogisticAspectDetector, catalog: AspectCatalog, path: Path) -> None:
        pass

    @abstractmethod
    def load_detector(self, path: Path, catalog: AspectCatalog) -> dict[str, np.ndarray]:
        pass
