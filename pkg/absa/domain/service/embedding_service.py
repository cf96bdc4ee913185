"""Subword skip-gram embedding trainer.

Each word is represented by its own vector plus the mean of its hashed
character n-gram bucket vectors. Training uses skip-gram with negative
sampling from the unigram distribution raised to 0.75 and a learning rate
decaying linearly to zero over all epochs.
"""

from collections import Counter
from collections.abc import Callable, Iterable, Iterator

import logfire
import numpy as np
from pydantic import Field

from absa.domain.error import InvalidConfigurationError
from absa.domain.model import EmbeddingTable, Vocabulary
from absa.domain.model.common import DomainModel
from absa.domain.text import ngram_buckets, tokenize

from .base import Service

# Floor of the decayed learning rate, as a fraction of the initial one
_MIN_LR_FRACTION = 1e-4


class CorpusStream:
    """Re-iterable stream of tokenized lines.

    ``source`` is called once per pass and must yield the raw lines again;
    lines are tokenized with the same tokenizer the models use.
    """

    def __init__(self, source: Callable[[], Iterable[str]]):
        self._source = source
        self.line_count = 0
        self.token_count = 0

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "CorpusStream":
        materialized = list(lines)
        return cls(lambda: materialized)

    def __iter__(self) -> Iterator[list[str]]:
        lines = tokens = 0
        for line in self._source():
            sentence = tokenize(line)
            lines += 1
            tokens += len(sentence)
            yield sentence
        self.line_count, self.token_count = lines, tokens


class SkipGramConfig(DomainModel):
    """Skip-gram hyperparameters."""

    dim: int = Field(default=300, ge=1)
    window: int = Field(default=5, ge=1)
    negatives: int = Field(default=5, ge=1)
    epochs: int = Field(default=5, ge=1)
    learning_rate: float = Field(default=0.05, gt=0)
    min_count: int = Field(default=2, ge=1)
    min_n: int = Field(default=3, ge=1)
    max_n: int = Field(default=6, ge=1)
    buckets: int = Field(default=200_000, ge=1)
    seed: int = 42


def skipgram_pairs(tokens: list[str], window: int) -> list[tuple[str, str]]:
    """(center, context) pairs, centers left to right, contexts in ascending position."""
    pairs = []
    for i, center in enumerate(tokens):
        for j in range(max(0, i - window), min(len(tokens), i + window + 1)):
            if j != i:
                pairs.append((center, tokens[j]))
    return pairs


class NegativeSampler:
    """Draws token indices with probability proportional to count^0.75."""

    def __init__(self, counts: np.ndarray, exponent: float = 0.75):
        weights = np.asarray(counts, dtype=np.float64) ** exponent
        self.probabilities = weights / weights.sum()
        self._cdf = np.cumsum(self.probabilities)
        self._cdf[-1] = 1.0

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return np.searchsorted(self._cdf, rng.random(size), side="right")


def build_vocabulary(corpus: Iterable[list[str]], min_count: int) -> Vocabulary:
    """Tokens occurring at least ``min_count`` times, by descending count then token."""
    counts: Counter[str] = Counter()
    for sentence in corpus:
        counts.update(sentence)
    kept = sorted((t for t, c in counts.items() if c >= min_count), key=lambda t: (-counts[t], t))
    return Vocabulary(tokens=tuple(kept), counts=tuple(counts[t] for t in kept))


def train_subword_skipgram(corpus: CorpusStream, config: SkipGramConfig) -> EmbeddingTable:
    """Train word and n-gram bucket vectors on a plain-text corpus.

    Exported word rows are the full input representation (word vector plus
    bucket mean); out-of-vocabulary words are later composed from the
    buckets alone.

    Raises:
        InvalidConfigurationError: If no token survives min-count filtering
    """
    if config.min_n > config.max_n:
        raise InvalidConfigurationError("min_n must not exceed max_n")
    vocabulary = build_vocabulary(corpus, config.min_count)
    if vocabulary.size == 0:
        raise InvalidConfigurationError(
            f"Corpus has no token occurring at least {config.min_count} times"
        )

    rng = np.random.default_rng(config.seed)
    dim = config.dim
    words = rng.uniform(-0.5 / dim, 0.5 / dim, size=(vocabulary.size, dim))
    buckets = np.zeros((config.buckets, dim))
    outputs = np.zeros((vocabulary.size, dim))
    ngram_ids = [
        np.array(ngram_buckets(t, config.min_n, config.max_n, config.buckets)) for t in vocabulary.tokens
    ]
    sampler = NegativeSampler(np.array(vocabulary.counts))

    total_tokens = sum(vocabulary.counts)
    planned = max(1, config.epochs * total_tokens)
    processed = 0

    for epoch in range(1, config.epochs + 1):
        epoch_loss = 0.0
        pair_count = 0
        for sentence in corpus:
            ids = [i for i in (vocabulary.index(t) for t in sentence) if i is not None]
            for position, center in enumerate(ids):
                lr = config.learning_rate * max(1.0 - processed / planned, _MIN_LR_FRACTION)
                processed += 1
                lo = max(0, position - config.window)
                hi = min(len(ids), position + config.window + 1)
                for j in range(lo, hi):
                    if j == position:
                        continue
                    epoch_loss += _update_pair(
                        center, ids[j], words, buckets, outputs, ngram_ids[center], sampler, rng, config.negatives, lr
                    )
                    pair_count += 1
        logfire.info(
            "Skip-gram epoch finished",
            epoch=epoch,
            pairs=pair_count,
            mean_loss=epoch_loss / max(pair_count, 1),
        )

    composed = np.stack([words[i] + buckets[ngram_ids[i]].mean(axis=0) for i in range(vocabulary.size)])
    return EmbeddingTable(
        vocabulary=vocabulary,
        words=composed,
        buckets=buckets,
        min_n=config.min_n,
        max_n=config.max_n,
    )


def _update_pair(
    center: int,
    context: int,
    words: np.ndarray,
    buckets: np.ndarray,
    outputs: np.ndarray,
    center_buckets: np.ndarray,
    sampler: NegativeSampler,
    rng: np.random.Generator,
    negatives: int,
    lr: float,
) -> float:
    """One SGD step on a (center, context) pair plus its negatives; returns the loss."""
    hidden = words[center] + buckets[center_buckets].mean(axis=0)
    grad_hidden = np.zeros_like(hidden)
    loss = 0.0
    targets = [(context, 1.0)] + [(int(n), 0.0) for n in sampler.sample(rng, negatives) if n != context]
    for target, label in targets:
        score = float(outputs[target] @ hidden)
        prob = 0.5 * (1.0 + np.tanh(0.5 * score))
        loss -= np.log(max(prob if label else 1.0 - prob, 1e-12))
        step = lr * (label - prob)
        grad_hidden += step * outputs[target]
        outputs[target] += step * hidden
    words[center] += grad_hidden
    np.add.at(buckets, center_buckets, grad_hidden / len(center_buckets))
    return loss


class EmbeddingService(Service):
    """Trains subword embeddings."""

    def train(self, corpus: CorpusStream, config: SkipGramConfig) -> EmbeddingTable:
        with logfire.span(
            "embedding_service.train",
            dim=config.dim,
            epochs=config.epochs,
            buckets=config.buckets,
        ):
            table = train_subword_skipgram(corpus, config)
            logfire.info(
                "Embeddings trained",
                vocabulary=table.vocabulary.size,
                lines=corpus.line_count,
                tokens=corpus.token_count,
            )
            return table
