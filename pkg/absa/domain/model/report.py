"""Evaluation reports, training histories and search logs."""

from pydantic import Field, model_validator

from absa.domain.model.common import DomainModel
from absa.domain.value import Architecture, EmbeddingSource, Split, TaskMode


class EvalReport(DomainModel):
    """Micro-averaged precision, recall and F1 over one set of documents.

    Precision (recall) with a zero denominator is reported as 0, and so is
    F1 when precision + recall is 0.
    """

    task: TaskMode
    split: Split | None = None
    documents: int = Field(default=0, ge=0)
    tp: int = Field(ge=0)
    fp: int = Field(ge=0)
    fn: int = Field(ge=0)
    precision: float
    recall: float
    f1: float

    # Published score of the same architecture/embedding cell, when one exists
    reference_f1: float | None = None
    delta: float | None = None

    def with_reference(self, reference_f1: float | None) -> "EvalReport":
        if reference_f1 is None:
            return self
        return self.model_copy(
            update={"reference_f1": reference_f1, "delta": self.f1 - reference_f1}
        )


class EpochRecord(DomainModel):
    """Metrics recorded after one training epoch."""

    epoch: int = Field(ge=1)
    loss: float
    dev_f1: float
    seconds: float | None = None


class TrainHistory(DomainModel):
    """Per-epoch training log; ``best_epoch`` marks the parameters kept."""

    epochs: list[EpochRecord] = Field(default_factory=list)
    best_epoch: int | None = None
    stopped_early: bool = False

    @model_validator(mode="after")
    def validate_best_epoch(self) -> "TrainHistory":
        if self.best_epoch is not None and not 1 <= self.best_epoch <= len(self.epochs):
            raise ValueError("best_epoch must refer to a recorded epoch")
        return self

    @property
    def best_dev_f1(self) -> float | None:
        if self.best_epoch is None:
            return None
        return self.epochs[self.best_epoch - 1].dev_f1

    @property
    def losses(self) -> list[float]:
        return [e.loss for e in self.epochs]


class TrialRecord(DomainModel):
    """One random-search trial."""

    trial: int = Field(ge=1)
    learning_rate: float
    batch_size: int
    seed: int
    dev_f1: float
    best_epoch: int | None = None


class ComparisonRow(DomainModel):
    """One cell of an architecture comparison."""

    system: str
    architecture: Architecture | None = None
    embedding_source: EmbeddingSource | None = None
    split: Split
    task: TaskMode
    f1: float
    reference_f1: float | None = None
    delta: float | None = None


class ComparisonTable(DomainModel):
    """Rows of a pipeline vs end-to-end comparison."""

    rows: list[ComparisonRow] = Field(default_factory=list)

    def f1(self, system: str, split: Split, task: TaskMode) -> float | None:
        for row in self.rows:
            if row.system == system and row.split == split and row.task == task:
                return row.f1
        return None
