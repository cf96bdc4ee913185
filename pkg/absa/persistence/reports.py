"""JSON, CSV and JSON-lines artifacts."""

import csv
import io
import json
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from absa.domain.model import TrainHistory, TrialRecord

HISTORY_COLUMNS = ("epoch", "loss", "dev_f1", "seconds")


def to_json(payload: BaseModel | dict[str, Any] | list[Any]) -> str:
    """Indented JSON with a trailing newline."""
    if isinstance(payload, BaseModel):
        return payload.model_dump_json(indent=2) + "\n"
    return json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"


def history_csv(history: TrainHistory) -> str:
    """epoch,loss,dev_f1,seconds; ``seconds`` is empty unless wall-clock time was recorded."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HISTORY_COLUMNS)
    for record in history.epochs:
        writer.writerow(
            [
                record.epoch,
                repr(record.loss),
                repr(record.dev_f1),
                "" if record.seconds is None else f"{record.seconds:.3f}",
            ]
        )
    return buffer.getvalue()


def json_lines(records: Iterable[BaseModel]) -> str:
    return "".join(record.model_dump_json() + "\n" for record in records)


def trials_jsonl(trials: Iterable[TrialRecord]) -> str:
    return json_lines(trials)


def write_text(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write(content)
