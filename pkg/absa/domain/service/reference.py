"""Published GermEval 2017 micro-F1 scores for the architecture x embedding cells.

Deltas against these numbers are informative only: they were obtained on
the official data with embeddings trained on a large in-domain tweet
corpus.
"""

from absa.domain.value import Architecture, EmbeddingSource, Split, TaskMode

MAJORITY_BASELINE = "majority"

# (system, embedding source, task) -> (dev, test-syn, test-dia); None where unpublished
_SCORES: dict[tuple[str, EmbeddingSource | None, TaskMode], tuple[float | None, float | None, float | None]] = {
    (Architecture.PIPE_LSTM.value, EmbeddingSource.WORD2VEC, TaskMode.ASPECT_SENTIMENT): (0.350, 0.297, 0.342),
    (Architecture.E2E_LSTM.value, EmbeddingSource.WORD2VEC, TaskMode.ASPECT_SENTIMENT): (0.378, 0.315, 0.383),
    (Architecture.PIPE_CNN.value, EmbeddingSource.WORD2VEC, TaskMode.ASPECT_SENTIMENT): (0.350, 0.298, 0.343),
    (Architecture.E2E_CNN.value, EmbeddingSource.WORD2VEC, TaskMode.ASPECT_SENTIMENT): (0.400, 0.319, 0.388),
    (Architecture.PIPE_LSTM.value, EmbeddingSource.GLOVE, TaskMode.ASPECT_SENTIMENT): (0.350, 0.297, 0.342),
    (Architecture.E2E_LSTM.value, EmbeddingSource.GLOVE, TaskMode.ASPECT_SENTIMENT): (0.378, 0.315, 0.384),
    (Architecture.PIPE_CNN.value, EmbeddingSource.GLOVE, TaskMode.ASPECT_SENTIMENT): (0.350, 0.298, 0.342),
    (Architecture.E2E_CNN.value, EmbeddingSource.GLOVE, TaskMode.ASPECT_SENTIMENT): (0.415, 0.315, 0.390),
    (Architecture.PIPE_LSTM.value, EmbeddingSource.FASTTEXT, TaskMode.ASPECT_SENTIMENT): (0.350, 0.297, 0.342),
    (Architecture.E2E_LSTM.value, EmbeddingSource.FASTTEXT, TaskMode.ASPECT_SENTIMENT): (0.378, 0.315, 0.384),
    (Architecture.PIPE_CNN.value, EmbeddingSource.FASTTEXT, TaskMode.ASPECT_SENTIMENT): (0.342, 0.295, 0.342),
    (Architecture.E2E_CNN.value, EmbeddingSource.FASTTEXT, TaskMode.ASPECT_SENTIMENT): (0.511, 0.423, 0.465),
    (Architecture.E2E_LSTM.value, EmbeddingSource.WORD2VEC, TaskMode.ASPECT_ONLY): (0.517, 0.442, 0.455),
    (Architecture.E2E_CNN.value, EmbeddingSource.WORD2VEC, TaskMode.ASPECT_ONLY): (0.521, 0.436, 0.470),
    (Architecture.E2E_LSTM.value, EmbeddingSource.GLOVE, TaskMode.ASPECT_ONLY): (0.517, 0.442, 0.456),
    (Architecture.E2E_CNN.value, EmbeddingSource.GLOVE, TaskMode.ASPECT_ONLY): (0.537, 0.457, 0.480),
    (Architecture.E2E_LSTM.value, EmbeddingSource.FASTTEXT, TaskMode.ASPECT_ONLY): (0.517, 0.442, 0.456),
    (Architecture.E2E_CNN.value, EmbeddingSource.FASTTEXT, TaskMode.ASPECT_ONLY): (0.623, 0.523, 0.557),
    (MAJORITY_BASELINE, None, TaskMode.ASPECT_SENTIMENT): (None, 0.315, 0.384),
    (MAJORITY_BASELINE, None, TaskMode.ASPECT_ONLY): (None, 0.442, 0.456),
}

_COLUMNS = {Split.DEV: 0, Split.TEST_SYN: 1, Split.TEST_DIA: 2}


def reference_score(
    system: Architecture | str,
    embedding_source: EmbeddingSource | None,
    task: TaskMode,
    split: Split | None,
) -> float | None:
    """Published score of a cell, or None when the cell has no number."""
    if split is None or split not in _COLUMNS:
        return None
    name = system.value if isinstance(system, Architecture) else system
    source = None if name == MAJORITY_BASELINE else embedding_source
    row = _SCORES.get((name, source, task))
    return None if row is None else row[_COLUMNS[split]]
