"""Unit tests for micro-F1 scoring and the majority baseline."""

import itertools

import numpy as np
import pytest

from absa.domain.error import EvaluationError, InvalidConfigurationError
from absa.domain.model import AspectPrediction, PredictionSet
from absa.domain.service import EvaluationService, majority_baseline, micro_f1, reference_score
from absa.domain.value import Architecture, EmbeddingSource, Polarity, Split, TaskMode
from tests.conftest import make_document

P, N, U = Polarity.POSITIVE, Polarity.NEGATIVE, Polarity.NEUTRAL


def brute_force_f1(predictions, gold, task):
    """Enumerate every possible item and count by membership."""
    aspects = sorted({a for labels in (*predictions.values(), *gold.values()) for a in labels})
    tp = fp = fn = 0
    for doc_id in gold:
        for aspect in aspects:
            for polarity in (list(Polarity) if task is TaskMode.ASPECT_SENTIMENT else [None]):
                def has(labels):
                    if aspect not in labels:
                        return False
                    return polarity is None or labels[aspect] == polarity

                p, g = has(predictions[doc_id]), has(gold[doc_id])
                tp += p and g
                fp += p and not g
                fn += g and not p
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    return 2 * precision * recall / (precision + recall) if precision + recall else 0.0


class TestMicroF1:
    """Tests for micro_f1."""

    def test_worked_example(self):
        """One correct triple, one wrong polarity, one missed aspect."""
        # Arrange
        gold = {"1": {"Zugfahrt": P, "Service": N}, "2": {"Ticketkauf": U}}
        predictions = {"1": {"Zugfahrt": P, "Service": P}, "2": {}}

        # Act
        report = micro_f1(predictions, gold, TaskMode.ASPECT_SENTIMENT)

        # Assert
        assert (report.tp, report.fp, report.fn) == (1, 1, 2)
        assert report.precision == pytest.approx(0.5)
        assert report.recall == pytest.approx(1 / 3)
        assert report.f1 == pytest.approx(0.4)

    def test_aspect_only_ignores_polarity(self):
        gold = {"1": {"Zugfahrt": P, "Service": N}}
        predictions = {"1": {"Zugfahrt": N, "Service": N}}
        assert micro_f1(predictions, gold, TaskMode.ASPECT_ONLY).f1 == 1.0

    def test_zero_denominators_give_zero(self):
        """No predictions and no gold: every ratio is 0."""
        report = micro_f1({"1": {}}, {"1": {}}, TaskMode.ASPECT_SENTIMENT)
        assert (report.precision, report.recall, report.f1) == (0.0, 0.0, 0.0)

    def test_accepts_prediction_sets(self):
        predictions = {"1": PredictionSet(aspects={"Service": AspectPrediction(polarity=N, confidence=0.9)})}
        assert micro_f1(predictions, {"1": {"Service": N}}, TaskMode.ASPECT_SENTIMENT).f1 == 1.0

    def test_mismatched_document_ids_raise(self):
        with pytest.raises(EvaluationError, match="missing predictions for \\['2'\\]"):
            micro_f1({"1": {}}, {"1": {}, "2": {}}, TaskMode.ASPECT_ONLY)

    @pytest.mark.parametrize("task", list(TaskMode))
    @pytest.mark.parametrize("seed", range(5))
    def test_matches_brute_force_oracle(self, task, seed):
        rng = np.random.default_rng(seed)
        aspects = ["A", "B", "C", "D"]

        def random_labels():
            return {a: list(Polarity)[int(rng.integers(3))] for a in aspects if rng.random() < 0.4}

        gold = {str(i): random_labels() for i in range(12)}
        predictions = {str(i): random_labels() for i in range(12)}

        assert micro_f1(predictions, gold, task).f1 == pytest.approx(brute_force_f1(predictions, gold, task))

    @staticmethod
    def random_labels(rng, aspects):
        return {a: list(Polarity)[int(rng.integers(3))] for a in aspects if rng.random() < 0.5}

    def test_thousand_random_small_instances_match_the_oracle(self):
        """Up to five documents over up to four aspects, scored in both task modes."""
        rng = np.random.default_rng(2017)

        for _ in range(1000):
            aspects = ["A", "B", "C", "D"][: int(rng.integers(1, 5))]
            ids = [str(i) for i in range(int(rng.integers(1, 6)))]

            gold = {i: self.random_labels(rng, aspects) for i in ids}
            predictions = {i: self.random_labels(rng, aspects) for i in ids}
            sentiment = micro_f1(predictions, gold, TaskMode.ASPECT_SENTIMENT)
            aspect_only = micro_f1(predictions, gold, TaskMode.ASPECT_ONLY)

            assert sentiment.f1 == pytest.approx(brute_force_f1(predictions, gold, TaskMode.ASPECT_SENTIMENT))
            assert aspect_only.f1 == pytest.approx(brute_force_f1(predictions, gold, TaskMode.ASPECT_ONLY))
            assert aspect_only.f1 >= sentiment.f1


class TestMajorityBaseline:
    """Tests for majority_baseline."""

    def test_most_frequent_pair_wins(self, catalog):
        docs = [
            make_document("1", "a", {"Service": N}),
            make_document("2", "b", {"Service": N, "Zugfahrt": P}),
            make_document("3", "c", {"Zugfahrt": P, "Ticketkauf": U}),
            make_document("4", "d", {"Service": N}),
        ]
        baseline = majority_baseline(docs, catalog)
        assert (baseline.aspect, baseline.polarity) == ("Service", N)
        assert baseline.frequency == pytest.approx(3 / 6)

    def test_ties_go_to_smallest_aspect_then_class(self, catalog):
        docs = [
            make_document("1", "a", {"Ticketkauf": P}),
            make_document("2", "b", {"Zugfahrt": U}),
            make_document("3", "c", {"Zugfahrt": N}),
        ]
        baseline = majority_baseline(docs, catalog)
        assert (baseline.aspect, baseline.polarity) == ("Zugfahrt", N)

    def test_predicts_the_same_pair_for_every_document(self, catalog):
        baseline = majority_baseline([make_document("1", "a", {"Service": U})], catalog)
        assert baseline.predict(("x",)).labels == {"Service": U}
        assert baseline.predict(()).labels == {"Service": U}

    def test_unlabeled_training_data_raises(self, catalog):
        with pytest.raises(InvalidConfigurationError, match="labeled"):
            majority_baseline([make_document("1", "a")], catalog)


class TestEvaluationService:
    """Tests for EvaluationService.evaluate."""

    def test_report_carries_reference_score(self, catalog):
        docs = [make_document("1", "a", {"Service": U}, Split.TEST_SYN)]
        baseline = majority_baseline(docs, catalog)

        report = EvaluationService().evaluate(baseline, docs, TaskMode.ASPECT_SENTIMENT, Split.TEST_SYN)

        assert report.f1 == 1.0
        assert report.reference_f1 == pytest.approx(0.315)
        assert report.delta == pytest.approx(1.0 - 0.315)

    def test_no_reference_without_split(self, catalog):
        docs = [make_document("1", "a", {"Service": U})]
        report = EvaluationService().evaluate(majority_baseline(docs, catalog), docs, TaskMode.ASPECT_ONLY)
        assert report.reference_f1 is None
        assert report.delta is None


class TestReferenceScore:
    """Tests for the published score lookup."""

    def test_known_cells(self):
        assert reference_score(Architecture.E2E_CNN, EmbeddingSource.FASTTEXT, TaskMode.ASPECT_SENTIMENT, Split.TEST_DIA) == pytest.approx(0.465)
        assert reference_score("majority", None, TaskMode.ASPECT_ONLY, Split.TEST_SYN) == pytest.approx(0.442)

    def test_unknown_cells(self):
        assert reference_score(Architecture.PIPE_CNN, EmbeddingSource.FASTTEXT, TaskMode.ASPECT_ONLY, Split.DEV) is None
        assert reference_score(Architecture.E2E_CNN, EmbeddingSource.OTHER, TaskMode.ASPECT_SENTIMENT, Split.DEV) is None
        assert reference_score("majority", None, TaskMode.ASPECT_SENTIMENT, Split.DEV) is None

    def test_all_architectures_have_triple_scores(self):
        for architecture, source in itertools.product(Architecture, [EmbeddingSource.WORD2VEC, EmbeddingSource.GLOVE]):
            assert reference_score(architecture, source, TaskMode.ASPECT_SENTIMENT, Split.DEV) is not None
