"""Network construction."""

from collections.abc import Iterable

import numpy as np

from absa.domain.model import EmbeddingTable, NetworkConfig, Vocabulary
from absa.domain.network.base import Network
from absa.domain.network.detector import LogisticAspectDetector
from absa.domain.network.embedding_layer import EmbeddingLayer
from absa.domain.network.joint import JointNetwork
from absa.domain.network.params import ParamStore
from absa.domain.network.pipeline import PipelineNetwork
from absa.domain.value import Architecture, AspectCatalog


def _network_class(architecture: Architecture) -> type[JointNetwork] | type[PipelineNetwork]:
    return PipelineNetwork if architecture.is_pipeline else JointNetwork


def build_network(
    architecture: Architecture,
    catalog: AspectCatalog,
    table: EmbeddingTable,
    tokens: Iterable[str],
    config: NetworkConfig,
    seed: int,
) -> Network:
    """Fresh network whose vocabulary covers ``tokens``.

    Weights are uniform(-init_scale, init_scale) and biases zero, drawn in
    parameter order from a generator seeded with ``seed``.
    """
    token_list = list(tokens)

    def embedding_factory(params: ParamStore, min_length: int) -> EmbeddingLayer:
        return EmbeddingLayer.from_table(params, table, token_list, min_length)

    rng = np.random.default_rng(seed)
    return _network_class(architecture)(architecture, catalog, embedding_factory, config, rng)


def restore_network(
    architecture: Architecture,
    catalog: AspectCatalog,
    config: NetworkConfig,
    table: EmbeddingTable,
    vocabulary: Vocabulary,
    arrays: dict[str, np.ndarray],
) -> Network:
    """Rebuild a saved network around its pretrained table and load its parameters.

    ``arrays`` holds the parameters plus ``embedding.bucket_ids``, the table
    bucket each trainable bucket row stands for.
    """
    bucket_ids = arrays.get("embedding.bucket_ids", np.zeros(0, dtype=np.int64))

    def embedding_factory(params: ParamStore, min_length: int) -> EmbeddingLayer:
        return EmbeddingLayer(
            params,
            table,
            vocabulary,
            arrays["embedding.words"],
            bucket_ids,
            arrays.get("embedding.buckets"),
            min_length,
        )

    network = _network_class(architecture)(
        architecture, catalog, embedding_factory, config, np.random.default_rng(0)
    )
    network.params.load(arrays)
    if isinstance(network, PipelineNetwork) and "detector.weights" in arrays:
        detector = LogisticAspectDetector(catalog.size, network.embedding.mean_vector)
        detector.load(arrays)
        network.detector = detector
    return network
