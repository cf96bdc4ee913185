"""Inference over raw text for the predict command and the HTTP server."""

from collections.abc import Iterable, Iterator

import logfire

from absa.domain.model import PredictionRecord
from absa.domain.network import ModelBundle
from absa.domain.text import tokenize

from .base import Service


class PredictionService(Service):
    """Predicts over a loaded model; read-only, so safe to share between threads."""

    def __init__(self, bundle: ModelBundle):
        self.bundle = bundle

    def predict_text(self, doc_id: str, text: str) -> PredictionRecord:
        network = self.bundle.network
        prediction = network.predict(tokenize(text))
        return PredictionRecord.from_prediction_set(doc_id, prediction, network.catalog)

    def predict_line(self, doc_id: str, line: bytes) -> PredictionRecord:
        """One raw input line; undecodable bytes give an error record."""
        try:
            text = line.decode("utf-8")
        except UnicodeDecodeError as exc:
            logfire.warn("Undecodable input line", doc_id=doc_id, error=str(exc))
            return PredictionRecord(doc_id=doc_id, error=f"invalid UTF-8 input: {exc.reason}")
        return self.predict_text(doc_id, text.rstrip("\r\n"))

    def predict_lines(self, lines: Iterable[bytes]) -> Iterator[PredictionRecord]:
        """Records in input order, ids counting lines from 1."""
        for number, line in enumerate(lines, start=1):
            yield self.predict_line(str(number), line)

    def predict_documents(self, documents: Iterable[str]) -> list[PredictionRecord]:
        """Same ids as ``predict_lines`` gives the same documents."""
        return [self.predict_text(str(number), text) for number, text in enumerate(documents, start=1)]
