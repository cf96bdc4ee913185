"""Model predictions."""

from pydantic import Field, model_validator

from absa.domain.model.common import DomainModel
from absa.domain.value import AspectCatalog, LabelVector, Polarity


class AspectPrediction(DomainModel):
    """Predicted polarity for one aspect with the winning class probability."""

    polarity: Polarity
    confidence: float = Field(ge=0.0, le=1.0)


class PredictionSet(DomainModel):
    """Aspects predicted present in one document."""

    aspects: dict[str, AspectPrediction] = Field(default_factory=dict)

    @property
    def labels(self) -> dict[str, Polarity]:
        return {aspect: p.polarity for aspect, p in self.aspects.items()}

    def to_label_vector(self, catalog: AspectCatalog) -> LabelVector:
        z = [0] * catalog.size
        for aspect, prediction in self.aspects.items():
            z[catalog.index(aspect)] = prediction.polarity.joint_index
        return LabelVector(tuple(z))


class PredictedAspect(DomainModel):
    """One entry of a prediction record."""

    aspect: str
    polarity: Polarity
    confidence: float


class PredictionRecord(DomainModel):
    """Serialized prediction for one input document.

    ``error`` is set (and ``predictions`` empty) when the input could not be
    decoded; processing of the remaining inputs continues.
    """

    doc_id: str
    predictions: list[PredictedAspect] = Field(default_factory=list)
    error: str | None = None

    @model_validator(mode="after")
    def validate_unique_aspects(self) -> "PredictionRecord":
        aspects = [p.aspect for p in self.predictions]
        if len(set(aspects)) != len(aspects):
            raise ValueError("Aspects must be unique within a prediction record")
        return self

    @classmethod
    def from_prediction_set(
        cls, doc_id: str, prediction: PredictionSet, catalog: AspectCatalog
    ) -> "PredictionRecord":
        """Build a record listing aspects in catalog order."""
        ordered = sorted(prediction.aspects.items(), key=lambda kv: catalog.index(kv[0]))
        return cls(
            doc_id=doc_id,
            predictions=[
                PredictedAspect(aspect=a, polarity=p.polarity, confidence=p.confidence)
                for a, p in ordered
            ],
        )
