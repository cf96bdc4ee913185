"""Unit tests for conflict filtering."""

from absa.domain.service import CorpusService, filter_conflicts
from absa.domain.value import Polarity, Split
from tests.conftest import make_document, synthetic_documents

P, N, U = Polarity.POSITIVE, Polarity.NEGATIVE, Polarity.NEUTRAL


class TestFilterConflicts:
    """Tests for filter_conflicts."""

    def test_drops_conflicted_training_documents(self):
        # Arrange
        docs = [
            make_document("1", "zug gut", {"Zugfahrt": P}),
            make_document("2", "zug gut schlecht", {"Zugfahrt": (P, N)}),
            make_document("3", "personal", {"Service": (U, N), "Zugfahrt": P}),
            make_document("4", "ticket", {"Ticketkauf": (U, U)}),
        ]

        # Act
        retained, report = filter_conflicts(docs)

        # Assert
        assert [d.id for d in retained] == ["1", "4"]
        assert (report.input_count, report.dropped, report.retained) == (4, 2, 2)
        assert report.per_aspect == {"Service": 1, "Zugfahrt": 1}

    def test_four_conflicted_in_a_hundred_are_dropped(self):
        """96 of 100 documents remain and the report names the conflicted aspects."""
        # Arrange
        docs = synthetic_documents(Split.TRAIN, 100, seed=3, conflicts=4)
        conflicted = [d for d in docs if d.has_conflict]

        # Act
        retained, report = filter_conflicts(docs)

        # Assert
        assert len(conflicted) == 4
        assert (report.input_count, report.dropped, report.retained) == (100, 4, 96)
        assert not any(d.has_conflict for d in retained)
        assert [d.id for d in retained] == [d.id for d in docs if not d.has_conflict]
        assert sum(report.per_aspect.values()) == 4

    def test_repeated_identical_polarity_is_not_a_conflict(self):
        doc = make_document("1", "ticket", {"Ticketkauf": (U, U)})
        assert not doc.has_conflict

    def test_other_splits_pass_through(self):
        docs = [make_document("1", "zug", {"Zugfahrt": (P, N)}, Split.DEV)]
        retained, report = filter_conflicts(docs)
        assert retained == docs
        assert report.dropped == 0

    def test_empty_input(self):
        retained, report = filter_conflicts([])
        assert retained == []
        assert report.input_count == 0


class TestCorpusService:
    """Tests for CorpusService."""

    def test_prepare_training_matches_filter(self, splits):
        retained, report = CorpusService().prepare_training(splits[Split.TRAIN])
        assert report.dropped == 1
        assert len(retained) == len(splits[Split.TRAIN]) - 1

    def test_evaluation_keeps_conflicts_with_first_polarity(self):
        doc = make_document("1", "zug", {"Zugfahrt": (N, P)}, Split.TEST_SYN)
        [kept] = CorpusService().prepare_evaluation([doc])
        assert kept.labels == {"Zugfahrt": N}
