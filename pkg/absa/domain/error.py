"""Domain layer errors."""

from collections.abc import Iterable, Sequence


class DomainError(Exception):
    """Base domain error."""

    pass


class DimensionError(DomainError):
    """Raised when operand shapes do not agree."""

    def __init__(self, operation: str, *shapes: Sequence[int]):
        self.operation = operation
        self.shapes = tuple(tuple(s) for s in shapes)
        rendered = " and ".join(str(s) for s in self.shapes)
        super().__init__(f"{operation}: incompatible shapes {rendered}")


class NumericError(DomainError):
    """Raised when a computation produces NaN or infinite values."""

    pass


class ParseError(DomainError):
    """Raised when an input file violates its documented format."""

    def __init__(self, message: str, line_number: int | None = None, path: str | None = None):
        self.line_number = line_number
        self.path = path
        location = ""
        if path is not None:
            location += f"{path}:"
        if line_number is not None:
            location += f"line {line_number}: "
        elif location:
            location += " "
        super().__init__(f"{location}{message}")


class InvalidConfigurationError(DomainError):
    """Raised when inputs contradict the configured dimensions or limits."""

    pass


class UnknownAspectError(DomainError):
    """Raised when an aspect name is not part of the catalog."""

    def __init__(self, aspect: str):
        self.aspect = aspect
        super().__init__(f"Unknown aspect category: {aspect!r}")


class InvalidLabelError(DomainError):
    """Raised when a label vector entry or polarity is out of range."""

    pass


class CatalogMismatchError(DomainError):
    """Raised when a model was trained against a different aspect catalog."""

    def __init__(self, expected: str, actual: str):
        super().__init__(
            f"Aspect catalog mismatch: model has {expected[:12]}, got {actual[:12]}"
        )


class TapeMismatchError(DomainError):
    """Raised when a gradient tape was recorded by a different model."""

    pass


class UntrainedDetectorError(DomainError):
    """Raised when an aspect detector is used before training."""

    def __init__(self) -> None:
        super().__init__("Aspect detector has not been trained")


class TrainingDivergedError(DomainError):
    """Raised when the training loss becomes non-finite."""

    def __init__(self, epoch: int, batch: int, loss: float):
        self.epoch = epoch
        self.batch = batch
        self.loss = loss
        super().__init__(
            f"Training diverged at epoch {epoch}, batch {batch}: loss={loss}"
        )


class EvaluationError(DomainError):
    """Raised when predictions and gold labels cover different documents."""

    def __init__(self, missing_predictions: Iterable[str], missing_gold: Iterable[str]):
        self.missing_predictions = sorted(missing_predictions)
        self.missing_gold = sorted(missing_gold)
        super().__init__(
            "Prediction and gold document ids differ: "
            f"missing predictions for {self.missing_predictions}, "
            f"missing gold for {self.missing_gold}"
        )
