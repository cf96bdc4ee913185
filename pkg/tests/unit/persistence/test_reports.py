"""Unit tests for report serialization."""

import json

from absa.domain.model import EpochRecord, TrainHistory, TrialRecord
from absa.persistence.reports import history_csv, to_json, trials_jsonl, write_text


class TestHistoryCsv:
    """Tests for history_csv."""

    def test_seconds_blank_unless_recorded(self):
        history = TrainHistory(
            epochs=[
                EpochRecord(epoch=1, loss=0.5, dev_f1=0.25),
                EpochRecord(epoch=2, loss=0.125, dev_f1=0.5, seconds=1.23456),
            ],
            best_epoch=2,
        )

        assert history_csv(history) == (
            "epoch,loss,dev_f1,seconds\n"
            "1,0.5,0.25,\n"
            "2,0.125,0.5,1.235\n"
        )

    def test_empty_history_has_header_only(self):
        assert history_csv(TrainHistory()) == "epoch,loss,dev_f1,seconds\n"


class TestJson:
    """Tests for JSON and JSON-lines output."""

    def test_dicts_are_sorted_and_newline_terminated(self):
        text = to_json({"b": 1, "a": [1, 2]})
        assert text.endswith("}\n")
        assert list(json.loads(text)) == ["a", "b"]

    def test_trials_one_object_per_line(self):
        trials = [
            TrialRecord(trial=1, learning_rate=0.1, batch_size=5, seed=42, dev_f1=0.3, best_epoch=2),
            TrialRecord(trial=2, learning_rate=0.01, batch_size=10, seed=43, dev_f1=0.4),
        ]

        lines = trials_jsonl(trials).splitlines()

        assert [json.loads(line)["seed"] for line in lines] == [42, 43]
        assert json.loads(lines[1])["best_epoch"] is None

    def test_write_text_creates_parents(self, tmp_path):
        path = tmp_path / "a" / "b" / "report.json"
        write_text(path, "{}\n")
        assert path.read_bytes() == b"{}\n"
