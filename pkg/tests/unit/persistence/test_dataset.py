"""Unit tests for the dataset and catalog formats."""

import pytest

from absa.domain.error import ParseError
from absa.domain.value import Polarity, Split
from absa.persistence.dataset import format_catalog, format_document, parse_catalog, parse_dataset
from tests.conftest import make_document


class TestParseDataset:
    """Tests for parse_dataset."""

    def test_parses_documents(self, catalog):
        lines = [
            "1\tDer Zug war pünktlich!\tZugfahrt:positive\n",
            "2\tnichts zu sagen\t\n",
            "\n",
            "3\tpersonal und ticket\tService:negative;Ticketkauf:Neutral\n",
        ]

        documents = parse_dataset(lines, catalog, Split.DEV)

        assert [d.id for d in documents] == ["1", "2", "3"]
        assert documents[0].tokens == ("der", "zug", "war", "pünktlich", "!")
        assert documents[1].labels == {}
        assert documents[2].labels == {"Service": Polarity.NEGATIVE, "Ticketkauf": Polarity.NEUTRAL}
        assert all(d.split is Split.DEV for d in documents)

    def test_repeated_pairs_collapse_and_conflicts_are_kept(self, catalog):
        [doc] = parse_dataset(
            ["1\tzug\tZugfahrt:positive;Zugfahrt:positive;Zugfahrt:negative\n"], catalog
        )
        assert doc.label_sets == {"Zugfahrt": (Polarity.POSITIVE, Polarity.NEGATIVE)}

    @pytest.mark.parametrize(
        ("line", "message"),
        [
            ("1\tzu wenig spalten\n", "expected 3 tab-separated columns, got 2"),
            ("1\tzug\tBahnhof:positive\n", "unknown aspect 'Bahnhof'"),
            ("1\tzug\tZugfahrt:great\n", "unknown polarity 'great'"),
            ("1\tzug\tZugfahrt\n", "malformed label pair"),
            ("\tzug\t\n", "empty document id"),
        ],
    )
    def test_errors_carry_line_number(self, catalog, line, message):
        with pytest.raises(ParseError, match=f"data.tsv:line 2: {message}") as exc_info:
            parse_dataset(["0\tok\t\n", line], catalog, path="data.tsv")
        assert exc_info.value.line_number == 2

    def test_duplicate_ids_raise(self, catalog):
        with pytest.raises(ParseError, match="duplicate document id '7'"):
            parse_dataset(["7\ta\t\n", "7\tb\t\n"], catalog)

    def test_format_document_parses_back(self, catalog):
        doc = make_document("9", "zug gut", {"Zugfahrt": (Polarity.POSITIVE, Polarity.NEUTRAL)})
        [parsed] = parse_dataset([format_document(doc)], catalog)
        assert parsed == doc


class TestParseCatalog:
    """Tests for parse_catalog."""

    def test_one_name_per_line(self, catalog):
        assert parse_catalog(["Zugfahrt\n", "\n", "Service\n", "Ticketkauf\n"]) == catalog
        assert parse_catalog(format_catalog(catalog).splitlines()) == catalog

    def test_duplicate_names_raise(self):
        with pytest.raises(ParseError, match="line 3: duplicate aspect 'A'"):
            parse_catalog(["A", "B", "A"])

    def test_reserved_characters_raise(self):
        with pytest.raises(ParseError, match="invalid aspect catalog"):
            parse_catalog(["Bahn:Zug"])

    def test_empty_catalog_raises(self):
        with pytest.raises(ParseError, match="invalid aspect catalog"):
            parse_catalog([])
