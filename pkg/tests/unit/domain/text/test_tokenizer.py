"""Unit tests for the tokenizer and character n-grams."""

import numpy as np
import pytest

from absa.domain.text import extract_ngrams, fnv1a_32, ngram_buckets, tokenize


class TestTokenize:
    """Tests for tokenize."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("Die Bahn ist pünktlich!!", ["die", "bahn", "ist", "pünktlich", "!", "!"]),
            ("@DB_Bahn #fail", ["@db_bahn", "#fail"]),
            ("siehe https://bahn.de/x?y=1", ["siehe", "https://bahn.de/x?y=1"]),
            ("z.B. die S-Bahn, heute", ["z.b", ".", "die", "s-bahn", ",", "heute"]),
            ('"Zug" fällt aus', ['"', "zug", '"', "fällt", "aus"]),
            ("", []),
            ("   \t ", []),
        ],
    )
    def test_examples(self, text, expected):
        assert tokenize(text) == expected

    @pytest.mark.parametrize(
        "text",
        ["Die Bahn ist pünktlich!!", "(Zug) ... verspätet?!", "@user: www.bahn.de #fail :-)"],
    )
    def test_idempotent(self, text):
        """Tokenizing the joined tokens changes nothing."""
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens


class TestNgrams:
    """Tests for character n-grams and their buckets."""

    def test_short_word_includes_bracketed_word_once(self):
        """<ab> is emitted as a 4-gram and not appended again."""
        assert extract_ngrams("ab", 3, 6) == ["<ab", "ab>", "<ab>"]

    def test_long_word_appends_bracketed_word(self):
        grams = extract_ngrams("zugfahrt", 3, 4)
        assert grams[0] == "<zu"
        assert grams[-1] == "<zugfahrt>"
        assert len(grams) == 8 + 7 + 1

    @pytest.mark.parametrize(("n_min", "n_max"), [(1, 1), (3, 4), (3, 6), (2, 9)])
    def test_every_length_is_enumerated_left_to_right(self, n_min, n_max):
        """A bracketed word of length L yields L - n + 1 grams of each length n, shortest first."""
        rng = np.random.default_rng(n_min * 10 + n_max)
        for _ in range(50):
            word = "".join(rng.choice(list("abcäöüß"), size=int(rng.integers(1, 12))))
            bracketed = f"<{word}>"
            top = min(n_max, len(bracketed))

            grams = extract_ngrams(word, n_min, n_max)

            appended = len(bracketed) > n_max
            body = grams[:-1] if appended else grams
            for n in range(n_min, top + 1):
                assert sum(len(g) == n for g in body) == len(bracketed) - n + 1
            assert len(body) == sum(len(bracketed) - n + 1 for n in range(n_min, top + 1))
            assert [len(g) for g in body] == sorted(len(g) for g in body)
            assert all(g in bracketed for g in grams)
            assert grams[-1] == bracketed

    def test_empty_word_is_rejected(self):
        with pytest.raises(ValueError, match="non-empty"):
            extract_ngrams("", 3, 6)

    def test_fnv1a_reference_values(self):
        """Standard 32-bit FNV-1a test vectors."""
        assert fnv1a_32("") == 0x811C9DC5
        assert fnv1a_32("a") == 0xE40C292C
        assert fnv1a_32("foobar") == 0xBF9CF968

    def test_buckets_are_in_range_and_stable(self):
        ids = ngram_buckets("pünktlich", 3, 6, 97)
        assert all(0 <= i < 97 for i in ids)
        assert ids == ngram_buckets("pünktlich", 3, 6, 97)
