"""Model container.

A zip archive readable by ``numpy.load``: one ``.npy`` member per parameter
in parameter order, the frozen pretrained table the embedding layer resolves
against (stored once), detector arrays for pipeline models, and a JSON header
``header.json``. Every member carries a fixed timestamp, so saving the same
model twice yields identical bytes.
"""

import io
import json
import zipfile
from pathlib import Path
from typing import Any

import numpy as np

from absa.domain.error import CatalogMismatchError
from absa.domain.model import EmbeddingTable, HyperConfig, NetworkConfig, Vocabulary
from absa.domain.network import LogisticAspectDetector, ModelBundle, PipelineNetwork, restore_network
from absa.domain.value import POLARITY_ORDER, Architecture, AspectCatalog, EmbeddingSource
from absa.persistence.error import ArtifactNotFoundError, ModelFormatError, reading

FORMAT_VERSION = 2
HEADER = "header.json"
_EPOCH = (1980, 1, 1, 0, 0, 0)


def _header(bundle: ModelBundle, names: list[str]) -> dict[str, Any]:
    network = bundle.network
    embedding = network.embedding
    return {
        "format_version": FORMAT_VERSION,
        "architecture": network.architecture.value,
        "catalog": list(network.catalog.names),
        "catalog_sha256": network.catalog.fingerprint,
        "joint_classes": ["n/a", *(p.value for p in POLARITY_ORDER)],
        "pipeline_classes": [p.value for p in POLARITY_ORDER],
        "network": network.config.model_dump(mode="json"),
        "vocabulary": list(embedding.vocabulary.tokens),
        "table_vocabulary": list(embedding.table.vocabulary.tokens),
        "ngram_range": [embedding.min_n, embedding.max_n],
        "unknown_scale": embedding.unknown_scale,
        "embedding_source": bundle.embedding_source.value,
        "hyper": None if bundle.hyper is None else bundle.hyper.model_dump(mode="json"),
        "tensors": names,
    }


def _member(archive: zipfile.ZipFile, name: str, payload: bytes) -> None:
    info = zipfile.ZipInfo(name, date_time=_EPOCH)
    info.compress_type = zipfile.ZIP_DEFLATED
    info.external_attr = 0o644 << 16
    archive.writestr(info, payload)


def _frozen_arrays(bundle: ModelBundle) -> dict[str, np.ndarray]:
    embedding = bundle.network.embedding
    arrays = {"embedding.bucket_ids": embedding.bucket_ids, "table.words": embedding.table.words}
    if embedding.table.buckets is not None:
        arrays["table.buckets"] = embedding.table.buckets
    return arrays


def save_model(bundle: ModelBundle, path: Path) -> None:
    arrays = bundle.network.params.arrays()
    arrays.update(_frozen_arrays(bundle))
    detector = getattr(bundle.network, "detector", None)
    if isinstance(detector, LogisticAspectDetector) and detector.trained:
        arrays.update(detector.arrays())
    path.parent.mkdir(parents=True, exist_ok=True)
    with zipfile.ZipFile(path, "w") as archive:
        header = json.dumps(_header(bundle, list(arrays)), indent=2, sort_keys=True)
        _member(archive, HEADER, header.encode("utf-8"))
        for name, array in arrays.items():
            buffer = io.BytesIO()
            np.lib.format.write_array(buffer, np.ascontiguousarray(array), allow_pickle=False)
            _member(archive, f"{name}.npy", buffer.getvalue())


def read_header(path: Path) -> dict[str, Any]:
    if not path.is_file():
        raise ArtifactNotFoundError(path, "Model file")
    try:
        with reading(path), zipfile.ZipFile(path) as archive:
            return json.loads(archive.read(HEADER))
    except (zipfile.BadZipFile, KeyError, json.JSONDecodeError) as exc:
        raise ModelFormatError(f"Unreadable model container {path}: {exc}") from exc


def load_model(path: Path, catalog: AspectCatalog | None = None) -> ModelBundle:
    """Rebuild a saved model.

    Raises:
        ArtifactNotFoundError: If the file does not exist
        ModelFormatError: If the container is damaged or of another version
        CatalogMismatchError: If ``catalog`` differs from the training catalog
    """
    header = read_header(path)
    if header.get("format_version") != FORMAT_VERSION:
        raise ModelFormatError(f"Unsupported model format version {header.get('format_version')}")
    saved = AspectCatalog(names=tuple(header["catalog"]))
    if saved.fingerprint != header["catalog_sha256"]:
        raise ModelFormatError("Catalog hash does not match the stored catalog")
    if catalog is not None and catalog.fingerprint != saved.fingerprint:
        raise CatalogMismatchError(saved.fingerprint, catalog.fingerprint)

    try:
        with reading(path), zipfile.ZipFile(path) as archive:
            arrays = {
                name: np.lib.format.read_array(io.BytesIO(archive.read(f"{name}.npy")), allow_pickle=False)
                for name in header["tensors"]
            }
        min_n, max_n = header["ngram_range"]
        table = EmbeddingTable(
            vocabulary=Vocabulary(tokens=tuple(header["table_vocabulary"])),
            words=arrays["table.words"],
            buckets=arrays.get("table.buckets"),
            min_n=min_n,
            max_n=max_n,
            unknown_scale=header["unknown_scale"],
        )
        network = restore_network(
            Architecture(header["architecture"]),
            saved,
            NetworkConfig.model_validate(header["network"]),
            table,
            Vocabulary(tokens=tuple(header["vocabulary"])),
            arrays,
        )
    except (KeyError, ValueError, zipfile.BadZipFile) as exc:
        raise ModelFormatError(f"Damaged model container {path}: {exc}") from exc

    if isinstance(network, PipelineNetwork) and "detector.weights" not in arrays:
        raise ModelFormatError("Pipeline model has no trained aspect detector")
    hyper = header.get("hyper")
    return ModelBundle(
        network=network,
        embedding_source=EmbeddingSource(header["embedding_source"]),
        hyper=None if hyper is None else HyperConfig.model_validate(hyper),
    )


def save_detector(detector: LogisticAspectDetector, catalog: AspectCatalog, path: Path) -> None:
    """Standalone detector file, reusable by later pipeline runs."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with zipfile.ZipFile(path, "w") as archive:
        header = {"format_version": FORMAT_VERSION, "catalog_sha256": catalog.fingerprint}
        _member(archive, HEADER, json.dumps(header, sort_keys=True).encode("utf-8"))
        for name, array in detector.arrays().items():
            buffer = io.BytesIO()
            np.lib.format.write_array(buffer, array, allow_pickle=False)
            _member(archive, f"{name}.npy", buffer.getvalue())


def load_detector_arrays(path: Path, catalog: AspectCatalog) -> dict[str, np.ndarray]:
    header = read_header(path)
    if header.get("catalog_sha256") != catalog.fingerprint:
        raise CatalogMismatchError(str(header.get("catalog_sha256", "")), catalog.fingerprint)
    with zipfile.ZipFile(path) as archive:
        return {
            name: np.lib.format.read_array(io.BytesIO(archive.read(f"{name}.npy")), allow_pickle=False)
            for name in ("detector.weights", "detector.bias", "detector.thresholds")
        }
