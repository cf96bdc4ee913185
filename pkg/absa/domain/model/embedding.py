"""Vocabulary and embedding tables."""

from collections.abc import Sequence
from typing import Any

import numpy as np
from pydantic import Field, PrivateAttr, field_validator, model_validator

from absa.domain.model.common import DomainModel
from absa.domain.text import fnv1a_32, ngram_buckets


class Vocabulary(DomainModel):
    """Bijection between tokens and dense row indices."""

    tokens: tuple[str, ...] = ()
    counts: tuple[int, ...] = ()

    _index: dict[str, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, context: Any) -> None:
        self._index = {token: i for i, token in enumerate(self.tokens)}

    @model_validator(mode="after")
    def validate_bijection(self) -> "Vocabulary":
        if len(set(self.tokens)) != len(self.tokens):
            raise ValueError("Vocabulary tokens must be unique")
        if self.counts and len(self.counts) != len(self.tokens):
            raise ValueError("counts must be empty or match tokens")
        return self

    @property
    def size(self) -> int:
        return len(self.tokens)

    def index(self, token: str) -> int | None:
        return self._index.get(token)

    def __contains__(self, token: object) -> bool:
        return token in self._index

    def count(self, token: str) -> int:
        i = self._index.get(token)
        if i is None or not self.counts:
            return 0
        return self.counts[i]


class EmbeddingTable(DomainModel):
    """Word vectors plus optional hashed character n-gram bucket vectors.

    ``buckets`` is None for plain word2vec/glove style tables; OOV words then
    fall back to a deterministic pseudo-random vector seeded by the FNV-1a
    hash of the word.
    """

    vocabulary: Vocabulary
    words: np.ndarray
    buckets: np.ndarray | None = None
    min_n: int = Field(default=3, ge=1)
    max_n: int = Field(default=6, ge=1)
    unknown_scale: float = 0.01

    @field_validator("words", "buckets")
    @classmethod
    def validate_matrix(cls, v: np.ndarray | None) -> np.ndarray | None:
        if v is None:
            return v
        if v.ndim != 2:
            raise ValueError(f"Embedding matrix must be 2-D, got shape {v.shape}")
        if not np.isfinite(v).all():
            raise ValueError("Embedding matrix contains non-finite values")
        return np.asarray(v, dtype=np.float64)

    @model_validator(mode="after")
    def validate_shapes(self) -> "EmbeddingTable":
        if self.words.shape[0] != self.vocabulary.size:
            raise ValueError(
                f"{self.words.shape[0]} word rows for {self.vocabulary.size} tokens"
            )
        if self.buckets is not None and self.buckets.shape[1] != self.dim:
            raise ValueError("Bucket vectors and word vectors differ in dimension")
        if self.min_n > self.max_n:
            raise ValueError("min_n must not exceed max_n")
        return self

    @property
    def dim(self) -> int:
        return int(self.words.shape[1])

    @property
    def bucket_count(self) -> int:
        return 0 if self.buckets is None else int(self.buckets.shape[0])

    def bucket_ids(self, word: str) -> list[int]:
        """Bucket rows composing ``word``; empty when the table has no buckets."""
        if self.buckets is None or not word:
            return []
        return ngram_buckets(word, self.min_n, self.max_n, self.bucket_count)

    def compose_oov(self, word: str) -> np.ndarray:
        """Vector for a word outside the vocabulary.

        Mean of the word's n-gram bucket vectors when buckets exist, otherwise
        the hash-seeded fallback vector. Never fails.
        """
        ids = self.bucket_ids(word)
        if ids:
            assert self.buckets is not None
            return self.buckets[ids].mean(axis=0)
        return self.fallback_vector(word)

    def fallback_vector(self, word: str) -> np.ndarray:
        return fallback_vector(word, self.dim, self.unknown_scale)

    def lookup(self, token: str) -> np.ndarray:
        """Stored row for in-vocabulary tokens, composed vector otherwise."""
        i = self.vocabulary.index(token)
        if i is not None:
            return self.words[i]
        return self.compose_oov(token)

    def lookup_many(self, tokens: Sequence[str]) -> np.ndarray:
        if not tokens:
            return np.zeros((0, self.dim))
        return np.stack([self.lookup(t) for t in tokens])


def fallback_vector(word: str, dim: int, scale: float) -> np.ndarray:
    """Deterministic pseudo-random vector for a word, seeded by its FNV-1a hash."""
    rng = np.random.default_rng(fnv1a_32(word))
    return rng.normal(0.0, scale, size=dim)
