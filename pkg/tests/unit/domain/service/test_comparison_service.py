"""Unit tests for ComparisonService."""

from absa.domain.service import MAJORITY_BASELINE, ComparisonService, EvaluationService
from absa.domain.value import Architecture, EmbeddingSource, Split, TaskMode
from tests.conftest import toy_network


class TestComparisonService:
    """Tests for ComparisonService.compare."""

    def test_one_row_per_system_split_and_task(self, splits, catalog):
        # Arrange
        trained = []

        def train_architecture(architecture):
            trained.append(architecture)
            return toy_network(architecture)

        evaluated = {Split.TEST_SYN: splits[Split.TEST_SYN], Split.TEST_DIA: splits[Split.TEST_DIA]}

        # Act
        table = ComparisonService(EvaluationService()).compare(
            [Architecture.E2E_CNN, Architecture.E2E_LSTM],
            train_architecture,
            splits[Split.TRAIN],
            evaluated,
            catalog,
            EmbeddingSource.FASTTEXT,
        )

        # Assert
        assert trained == [Architecture.E2E_CNN, Architecture.E2E_LSTM]
        assert len(table.rows) == 3 * 2 * 2
        assert [r.system for r in table.rows[:4]] == [MAJORITY_BASELINE] * 4
        cnn = [r for r in table.rows if r.architecture is Architecture.E2E_CNN]
        assert {(r.split, r.task) for r in cnn} == {(s, t) for s in evaluated for t in TaskMode}

    def test_rows_carry_reference_scores(self, splits, catalog):
        table = ComparisonService(EvaluationService()).compare(
            [Architecture.E2E_CNN],
            toy_network,
            splits[Split.TRAIN],
            {Split.TEST_DIA: splits[Split.TEST_DIA]},
            catalog,
            EmbeddingSource.FASTTEXT,
        )
        [row] = [r for r in table.rows if r.system == "e2e-cnn" and r.task is TaskMode.ASPECT_SENTIMENT]
        assert row.reference_f1 == 0.465
        assert row.delta == row.f1 - 0.465
        assert table.f1(MAJORITY_BASELINE, Split.TEST_DIA, TaskMode.ASPECT_ONLY) is not None

    def test_empty_splits_are_skipped(self, splits, catalog):
        table = ComparisonService(EvaluationService()).compare(
            [], toy_network, splits[Split.TRAIN], {Split.DEV: []}, catalog, EmbeddingSource.OTHER
        )
        assert table.rows == []
