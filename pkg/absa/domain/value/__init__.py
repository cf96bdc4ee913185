"""Domain value objects."""

from absa.domain.value.catalog import GERMEVAL_ASPECTS, AspectCatalog, LabelVector
from absa.domain.value.labels import from_label_vector, to_label_vector
from absa.domain.value.types import (
    JOINT_CLASSES,
    NOT_APPLICABLE,
    POLARITY_ORDER,
    Architecture,
    EmbeddingSource,
    EncoderKind,
    Mode,
    Polarity,
    Split,
    TaskMode,
)

__all__ = [
    # Catalog
    "AspectCatalog",
    "GERMEVAL_ASPECTS",
    "LabelVector",
    # Types
    "Architecture",
    "EmbeddingSource",
    "EncoderKind",
    "JOINT_CLASSES",
    "Mode",
    "NOT_APPLICABLE",
    "POLARITY_ORDER",
    "Polarity",
    "Split",
    "TaskMode",
    # Labels
    "from_label_vector",
    "to_label_vector",
]
