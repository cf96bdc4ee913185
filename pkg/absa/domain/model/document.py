"""Labeled documents and the conflict filter report."""

from pydantic import Field, model_validator

from absa.domain.model.common import DomainModel
from absa.domain.value import Polarity, Split


class Document(DomainModel):
    """A short text with its gold aspect annotations.

    ``label_sets`` keeps every distinct polarity annotated for an aspect, in
    file order. After conflict filtering a training document has exactly one
    polarity per aspect; ``labels`` exposes that single-valued view (first
    listed polarity wins for documents that still carry a conflict).
    """

    id: str = Field(min_length=1)
    text: str
    tokens: tuple[str, ...]
    label_sets: dict[str, tuple[Polarity, ...]] = Field(default_factory=dict)
    split: Split = Split.TRAIN

    @model_validator(mode="after")
    def validate_label_sets(self) -> "Document":
        """Every annotated aspect carries at least one polarity."""
        for aspect, polarities in self.label_sets.items():
            if not polarities:
                raise ValueError(f"Aspect {aspect!r} has no polarity")
        return self

    @property
    def labels(self) -> dict[str, Polarity]:
        return {aspect: pols[0] for aspect, pols in self.label_sets.items()}

    @property
    def conflicted_aspects(self) -> list[str]:
        """Aspects annotated with two or more different polarities."""
        return [a for a, pols in self.label_sets.items() if len(set(pols)) > 1]

    @property
    def has_conflict(self) -> bool:
        return bool(self.conflicted_aspects)


class ConflictReport(DomainModel):
    """Outcome of dropping training documents with conflicting polarities."""

    input_count: int = Field(ge=0)
    dropped: int = Field(ge=0)
    retained: int = Field(ge=0)
    per_aspect: dict[str, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_counts(self) -> "ConflictReport":
        if self.dropped + self.retained != self.input_count:
            raise ValueError("dropped + retained must equal input_count")
        return self
