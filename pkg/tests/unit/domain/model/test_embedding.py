"""Unit tests for vocabularies, embedding tables and documents."""

import numpy as np
import pytest

from absa.domain.model import EmbeddingTable, Vocabulary, fallback_vector
from absa.domain.text import ngram_buckets
from absa.domain.value import Polarity, Split
from tests.conftest import make_document, toy_table


class TestVocabulary:
    """Tests for Vocabulary."""

    def test_index_of_known_and_unknown_tokens(self):
        vocab = Vocabulary(tokens=("a", "b"))
        assert vocab.index("b") == 1
        assert vocab.index("c") is None
        assert "a" in vocab

    def test_duplicate_tokens_are_rejected(self):
        with pytest.raises(ValueError, match="unique"):
            Vocabulary(tokens=("a", "a"))


class TestEmbeddingTable:
    """Tests for EmbeddingTable lookups."""

    def test_known_token_returns_its_row(self, table):
        i = table.vocabulary.index("zug")
        np.testing.assert_array_equal(table.lookup("zug"), table.words[i])

    def test_oov_token_is_mean_of_bucket_rows(self, table):
        ids = ngram_buckets("verspätung", table.min_n, table.max_n, table.bucket_count)
        np.testing.assert_allclose(table.lookup("verspätung"), table.buckets[ids].mean(axis=0))

    def test_oov_without_buckets_uses_hash_seeded_fallback(self):
        """The fallback is deterministic per word and scaled by unknown_scale."""
        plain = toy_table(buckets=None)

        vector = plain.lookup("verspätung")

        np.testing.assert_array_equal(vector, fallback_vector("verspätung", plain.dim, plain.unknown_scale))
        np.testing.assert_array_equal(vector, plain.lookup("verspätung"))
        assert not np.array_equal(vector, plain.lookup("ausfall"))

    def test_lookup_many_of_nothing(self, table):
        assert table.lookup_many([]).shape == (0, table.dim)

    def test_row_count_must_match_vocabulary(self):
        with pytest.raises(ValueError, match="word rows"):
            EmbeddingTable(vocabulary=Vocabulary(tokens=("a",)), words=np.zeros((2, 3)))

    def test_non_finite_rows_are_rejected(self):
        with pytest.raises(ValueError, match="non-finite"):
            EmbeddingTable(vocabulary=Vocabulary(tokens=("a",)), words=np.array([[np.nan]]))

    def test_bucket_dimension_must_match(self):
        with pytest.raises(ValueError, match="differ in dimension"):
            EmbeddingTable(
                vocabulary=Vocabulary(tokens=("a",)), words=np.zeros((1, 3)), buckets=np.zeros((4, 2))
            )


class TestDocument:
    """Tests for Document label views."""

    def test_single_valued_labels(self):
        doc = make_document("1", "zug gut", {"Zugfahrt": Polarity.POSITIVE})
        assert doc.labels == {"Zugfahrt": Polarity.POSITIVE}
        assert not doc.has_conflict

    def test_conflict_keeps_first_listed_polarity(self):
        doc = make_document(
            "2", "zug gut schlecht", {"Zugfahrt": (Polarity.NEGATIVE, Polarity.POSITIVE)}, Split.DEV
        )
        assert doc.has_conflict
        assert doc.conflicted_aspects == ["Zugfahrt"]
        assert doc.labels["Zugfahrt"] is Polarity.NEGATIVE

    def test_aspect_without_polarity_is_rejected(self):
        with pytest.raises(ValueError, match="no polarity"):
            make_document("3", "zug", {"Zugfahrt": ()})
