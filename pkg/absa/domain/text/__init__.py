"""Tokenization and character n-gram utilities."""

from absa.domain.text.subword import extract_ngrams, fnv1a_32, ngram_buckets
from absa.domain.text.tokenizer import tokenize

__all__ = ["extract_ngrams", "fnv1a_32", "ngram_buckets", "tokenize"]
