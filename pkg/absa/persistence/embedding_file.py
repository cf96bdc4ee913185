"""Embedding text format.

UTF-8, LF line endings::

    <vocab_size> <dim>
    <token> <v_1> ... <v_dim>                 (vocab_size lines)
    ngram:buckets <count> <min_n> <max_n>      (optional)
    ngram:<bucket> <v_1> ... <v_dim>          (non-zero bucket rows)

Reals are written with 17 significant digits, so a save/load round trip
is bit-exact. Bucket rows that are absent are zero.
"""

from collections.abc import Iterable, Iterator
from pathlib import Path

import numpy as np

from absa.domain.error import InvalidConfigurationError, ParseError
from absa.domain.model import EmbeddingTable, Vocabulary
from absa.persistence.error import reading

NGRAM_PREFIX = "ngram:"
BUCKETS_LINE = "ngram:buckets"
# Upper bound on a declared bucket count; the matrix is allocated dense
MAX_BUCKETS = 10_000_000


def _fmt(values: np.ndarray) -> str:
    return " ".join(format(float(v), ".17g") for v in values)


def _vector(fields: list[str], dim: int, number: int, path: str | None) -> np.ndarray:
    if len(fields) != dim:
        raise ParseError(f"expected {dim} values, got {len(fields)}", number, path)
    try:
        vector = np.array([float(x) for x in fields])
    except ValueError:
        raise ParseError("non-numeric value", number, path) from None
    if not np.isfinite(vector).all():
        raise ParseError("non-finite value", number, path)
    return vector


def read_embeddings(
    lines: Iterable[str],
    expected_dim: int | None = None,
    path: str | None = None,
    unknown_scale: float = 0.01,
) -> EmbeddingTable:
    """Parse the embedding text format.

    Raises:
        ParseError: On a malformed header, row or extension line, with its line number
        InvalidConfigurationError: If the dimension differs from ``expected_dim``
    """
    numbered: Iterator[tuple[int, str]] = (
        (n, line.rstrip("\r\n")) for n, line in enumerate(lines, start=1)
    )
    try:
        number, header = next(numbered)
    except StopIteration:
        raise ParseError("empty embedding file", path=path) from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"malformed header {header!r}", number, path)
    size, dim = int(parts[0]), int(parts[1])
    if dim < 1:
        raise ParseError("dimension must be positive", number, path)
    if expected_dim is not None and dim != expected_dim:
        raise InvalidConfigurationError(
            f"Embedding dimension {dim} differs from configured dimension {expected_dim}"
        )

    tokens: list[str] = []
    rows: list[np.ndarray] = []
    for i in range(size):
        try:
            number, line = next(numbered)
        except StopIteration:
            raise ParseError(f"expected {size} word rows, found {i}", path=path) from None
        fields = line.rstrip(" ").split(" ")
        if not fields[0]:
            raise ParseError("missing token", number, path)
        rows.append(_vector(fields[1:], dim, number, path))
        tokens.append(fields[0])
    if len(set(tokens)) != len(tokens):
        raise ParseError("duplicate tokens in word rows", path=path)

    bucket_count: int | None = None
    bucket_rows: dict[int, np.ndarray] = {}
    min_n, max_n = 3, 6
    for number, line in numbered:
        if not line.strip():
            continue
        fields = line.rstrip(" ").split(" ")
        if fields[0] == BUCKETS_LINE:
            if bucket_count is not None or len(fields) != 4 or not all(f.isdigit() for f in fields[1:]):
                raise ParseError(f"malformed bucket header {line!r}", number, path)
            bucket_count, min_n, max_n = (int(f) for f in fields[1:])
            if bucket_count < 1 or not 1 <= min_n <= max_n:
                raise ParseError(f"invalid bucket header {line!r}", number, path)
            if bucket_count > MAX_BUCKETS:
                raise ParseError(f"bucket count {bucket_count} exceeds the limit of {MAX_BUCKETS}", number, path)
        elif fields[0].startswith(NGRAM_PREFIX):
            index = fields[0][len(NGRAM_PREFIX) :]
            if bucket_count is None:
                raise ParseError("bucket row before bucket header", number, path)
            if not index.isdigit() or int(index) >= bucket_count:
                raise ParseError(f"invalid bucket index {index!r}", number, path)
            if int(index) in bucket_rows:
                raise ParseError(f"duplicate bucket index {index!r}", number, path)
            bucket_rows[int(index)] = _vector(fields[1:], dim, number, path)
        else:
            raise ParseError(f"unexpected line after {size} word rows", number, path)

    # Allocated only once every declared row has been read and checked
    buckets: np.ndarray | None = None
    if bucket_count is not None:
        try:
            buckets = np.zeros((bucket_count, dim))
        except MemoryError:
            raise ParseError(f"{bucket_count} x {dim} bucket matrix does not fit in memory", path=path) from None
        for index, vector in bucket_rows.items():
            buckets[index] = vector
    return EmbeddingTable(
        vocabulary=Vocabulary(tokens=tuple(tokens)),
        words=np.stack(rows) if rows else np.zeros((0, dim)),
        buckets=buckets,
        min_n=min_n,
        max_n=max_n,
        unknown_scale=unknown_scale,
    )


def write_embeddings(table: EmbeddingTable) -> Iterator[str]:
    """Lines of the embedding text format, newline-terminated."""
    yield f"{table.vocabulary.size} {table.dim}\n"
    for token, row in zip(table.vocabulary.tokens, table.words, strict=True):
        yield f"{token} {_fmt(row)}\n"
    if table.buckets is not None:
        yield f"{BUCKETS_LINE} {table.bucket_count} {table.min_n} {table.max_n}\n"
        for index in np.flatnonzero(np.any(table.buckets != 0.0, axis=1)):
            yield f"{NGRAM_PREFIX}{index} {_fmt(table.buckets[index])}\n"


def load_embeddings(path: Path, expected_dim: int | None = None, unknown_scale: float = 0.01) -> EmbeddingTable:
    with reading(path), path.open(encoding="utf-8") as f:
        return read_embeddings(f, expected_dim, str(path), unknown_scale)


def save_embeddings(table: EmbeddingTable, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.writelines(write_embeddings(table))
