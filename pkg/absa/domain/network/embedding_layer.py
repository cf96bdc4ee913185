"""Trainable token embedding layer."""

from collections.abc import Iterable, Sequence

import numpy as np

from absa.domain.model import EmbeddingTable, Vocabulary
from absa.domain.network.params import ParamStore
from absa.domain.tensor import GradTape, Tensor, ops
from absa.domain.tensor.ops import PAD, Lookup


class EmbeddingLayer:
    """Pretrained table plus the rows a dataset fine-tunes.

    The pretrained table is shared, never copied. Only the rows the training
    tokens reach become parameters: word rows for training tokens, and bucket
    rows hit by the n-grams of training tokens missing from the table. A token
    resolves to

    1. its trainable word row,
    2. its frozen table row when the table knows it,
    3. the mean of its n-gram bucket rows, trainable where the layer owns
       them and frozen otherwise,
    4. the hash-seeded fallback vector.

    Without buckets, training tokens missing from the table get a trainable
    fallback row of their own.

    Sequences shorter than ``min_length`` are right-padded with the zero
    vector, which no gradient ever reaches.
    """

    def __init__(
        self,
        params: ParamStore,
        table: EmbeddingTable,
        vocabulary: Vocabulary,
        words: np.ndarray,
        bucket_ids: np.ndarray,
        buckets: np.ndarray | None,
        min_length: int = 1,
    ):
        if buckets is not None and buckets.shape[0] != len(bucket_ids):
            raise ValueError(f"{buckets.shape[0]} bucket rows for {len(bucket_ids)} bucket ids")
        self.table = table
        self.vocabulary = vocabulary
        self.words = params.add("embedding.words", words)
        self.buckets = None if buckets is None else params.add("embedding.buckets", buckets)
        self.bucket_ids = np.asarray(bucket_ids, dtype=np.int64)
        self._local = {int(b): i for i, b in enumerate(self.bucket_ids)}
        self.min_length = min_length

    @classmethod
    def from_table(
        cls,
        params: ParamStore,
        table: EmbeddingTable,
        tokens: Iterable[str],
        min_length: int = 1,
    ) -> "EmbeddingLayer":
        """Take the rows a dataset needs out of a pretrained table."""
        known: list[str] = []
        rows: list[np.ndarray] = []
        touched: set[int] = set()
        for token in sorted(set(tokens)):
            if token in table.vocabulary:
                known.append(token)
                rows.append(table.lookup(token))
            elif table.buckets is None:
                known.append(token)
                rows.append(table.fallback_vector(token))
            else:
                touched.update(table.bucket_ids(token))
        words = np.stack(rows) if rows else np.zeros((0, table.dim))
        bucket_ids = np.array(sorted(touched), dtype=np.int64)
        buckets = None if table.buckets is None else table.buckets[bucket_ids]
        return cls(params, table, Vocabulary(tokens=tuple(known)), words, bucket_ids, buckets, min_length)

    @property
    def dim(self) -> int:
        return self.table.dim

    @property
    def min_n(self) -> int:
        return self.table.min_n

    @property
    def max_n(self) -> int:
        return self.table.max_n

    @property
    def unknown_scale(self) -> float:
        return self.table.unknown_scale

    def lookups(self, tokens: Sequence[str]) -> list[Lookup]:
        plan = [self._lookup(t) for t in tokens]
        plan.extend([PAD] * max(0, self.min_length - len(plan)))
        return plan

    def _lookup(self, token: str) -> Lookup:
        index = self.vocabulary.index(token)
        if index is not None:
            return Lookup(word=index)
        row = self.table.vocabulary.index(token)
        if row is not None:
            return Lookup(constant=self.table.words[row])
        ids = self.table.bucket_ids(token)
        local = tuple(self._local[b] for b in ids if b in self._local)
        if not local:
            return Lookup(constant=self.table.compose_oov(token))
        frozen = [b for b in ids if b not in self._local]
        assert self.table.buckets is not None
        rest = self.table.buckets[frozen].sum(axis=0) / len(ids) if frozen else None
        return Lookup(buckets=local, constant=rest, share=len(ids))

    def __call__(self, tokens: Sequence[str], tape: GradTape | None = None) -> Tensor:
        """(T, d) embedded and padded sequence."""
        return ops.embed(self.words, self.buckets, self.lookups(tokens), tape)

    def mean_vector(self, tokens: Sequence[str]) -> np.ndarray:
        """Mean of the unpadded token vectors; zero for an empty document."""
        if not tokens:
            return np.zeros(self.dim)
        return ops.embed(self.words, self.buckets, [self._lookup(t) for t in tokens]).data.mean(axis=0)
