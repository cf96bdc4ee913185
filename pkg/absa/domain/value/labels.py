"""Conversion between label maps and joint label vectors."""

from collections.abc import Mapping

from absa.domain.error import InvalidLabelError
from absa.domain.value.catalog import AspectCatalog, LabelVector
from absa.domain.value.types import JOINT_CLASSES, NOT_APPLICABLE, Polarity


def to_label_vector(labels: Mapping[str, Polarity], catalog: AspectCatalog) -> LabelVector:
    """z[index(a)] = 0 for absent aspects, else 1/2/3 for positive/negative/neutral.

    Raises:
        UnknownAspectError: If an aspect is not in the catalog
    """
    z = [NOT_APPLICABLE] * catalog.size
    for aspect, polarity in labels.items():
        z[catalog.index(aspect)] = Polarity(polarity).joint_index
    return LabelVector(tuple(z))


def from_label_vector(z: LabelVector | tuple[int, ...], catalog: AspectCatalog) -> dict[str, Polarity]:
    """Exact inverse of ``to_label_vector``, in catalog order.

    Raises:
        InvalidLabelError: If the length differs from the catalog or an entry is out of range
    """
    entries = z.root if isinstance(z, LabelVector) else tuple(z)
    if len(entries) != catalog.size:
        raise InvalidLabelError(f"Label vector has {len(entries)} entries for {catalog.size} aspects")
    labels: dict[str, Polarity] = {}
    for index, entry in enumerate(entries):
        if not 0 <= entry < JOINT_CLASSES:
            raise InvalidLabelError(f"Label vector entry {entry} at index {index} is out of range")
        if entry != NOT_APPLICABLE:
            labels[catalog.names[index]] = Polarity.from_joint_index(entry)
    return labels
