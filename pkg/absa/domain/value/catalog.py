"""Aspect catalog and the joint label vector."""

import hashlib
from typing import Any

from pydantic import PrivateAttr, field_validator

from absa.domain.error import UnknownAspectError
from absa.domain.value.common import RootValueObject, ValueObject
from absa.domain.value.types import JOINT_CLASSES

# GermEval 2017 aspect categories; index = head index
GERMEVAL_ASPECTS: tuple[str, ...] = (
    "Allgemein",
    "Zugfahrt",
    "Sonstige_Unregelmässigkeiten",
    "Atmosphäre",
    "Ticketkauf",
    "Service_und_Kundenbetreuung",
    "Sicherheit",
    "Informationen",
    "Connectivity",
    "Auslastung_und_Platzangebot",
    "DB_App_und_Website",
    "Komfort_und_Ausstattung",
    "Barrierefreiheit",
    "Image",
    "Toiletten",
    "Gastronomisches_Angebot",
    "Reisen_mit_Kindern",
    "Design",
    "Gepäck",
    "QR-Code",
)


class AspectCatalog(ValueObject):
    """Ordered list of aspect category names.

    The order is fixed for the lifetime of a model: the position of a name
    is the index of its classification head.
    """

    names: tuple[str, ...]

    _positions: dict[str, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, context: Any) -> None:
        self._positions = {name: i for i, name in enumerate(self.names)}

    @field_validator("names")
    @classmethod
    def validate_names(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        """Names must be unique and usable inside "Aspect:polarity" pairs."""
        if not v:
            raise ValueError("Aspect catalog must not be empty")
        if len(set(v)) != len(v):
            raise ValueError("Aspect names must be unique")
        for name in v:
            if not name or name != name.strip():
                raise ValueError(f"Invalid aspect name {name!r}")
            if any(ch in name for ch in ":;\t\n"):
                raise ValueError(f"Aspect name {name!r} contains a reserved character")
        return v

    @classmethod
    def default(cls) -> "AspectCatalog":
        """The 20 GermEval 2017 categories, "Allgemein" first."""
        return cls(names=GERMEVAL_ASPECTS)

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def fingerprint(self) -> str:
        """SHA-256 over the newline-joined names; changes with order."""
        return hashlib.sha256("\n".join(self.names).encode("utf-8")).hexdigest()

    def index(self, aspect: str) -> int:
        """Head index of an aspect.

        Raises:
            UnknownAspectError: If the aspect is not in the catalog
        """
        try:
            return self._positions[aspect]
        except KeyError:
            raise UnknownAspectError(aspect) from None

    def __contains__(self, aspect: object) -> bool:
        return aspect in self._positions


class LabelVector(RootValueObject[tuple[int, ...]]):
    """Joint target z in {0,1,2,3}^|A|: N/A, positive, negative, neutral."""

    @field_validator("root")
    @classmethod
    def validate_entries(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        for entry in v:
            if not 0 <= entry < JOINT_CLASSES:
                raise ValueError(f"Label vector entry {entry} outside 0..{JOINT_CLASSES - 1}")
        return v

    def __len__(self) -> int:
        return len(self.root)

    def __getitem__(self, index: int) -> int:
        return self.root[index]
