"""A trained network together with its provenance."""

from dataclasses import dataclass

from absa.domain.model import HyperConfig
from absa.domain.network.base import Network
from absa.domain.value import Architecture, AspectCatalog, EmbeddingSource


@dataclass
class ModelBundle:
    """A trained network with the metadata needed to reproduce and score it."""

    network: Network
    embedding_source: EmbeddingSource = EmbeddingSource.OTHER
    hyper: HyperConfig | None = None

    @property
    def architecture(self) -> Architecture:
        return self.network.architecture

    @property
    def catalog(self) -> AspectCatalog:
        return self.network.catalog
