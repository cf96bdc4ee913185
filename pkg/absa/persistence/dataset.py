"""Dataset TSV and aspect catalog formats.

A dataset line is ``id<TAB>text<TAB>pairs`` where ``pairs`` is a possibly
empty ``;``-separated list of ``Aspect:polarity``. A dataset directory holds
one file per split (``train.tsv``, ``dev.tsv``, ``test-syn.tsv``,
``test-dia.tsv``). A catalog file lists one aspect name per line.
"""

from collections.abc import Iterable, Sequence
from pathlib import Path

from absa.domain.error import ParseError
from absa.domain.model import Document
from absa.domain.text import tokenize
from absa.domain.value import AspectCatalog, Polarity, Split

COLUMNS = 3


def split_path(dataset_dir: Path, split: Split) -> Path:
    return dataset_dir / f"{split.value}.tsv"


def parse_dataset(
    lines: Iterable[str],
    catalog: AspectCatalog,
    split: Split = Split.TRAIN,
    path: str | None = None,
) -> list[Document]:
    """Parse dataset lines into documents.

    Blank lines are skipped. Repeated identical pairs collapse silently;
    distinct polarities for one aspect are all kept for the conflict filter.

    Raises:
        ParseError: On a wrong column count, an unknown aspect or polarity,
            or a repeated document id
    """
    documents: list[Document] = []
    seen: set[str] = set()
    for number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        columns = line.split("\t")
        if len(columns) != COLUMNS:
            raise ParseError(f"expected {COLUMNS} tab-separated columns, got {len(columns)}", number, path)
        doc_id, text, pairs = columns
        doc_id = doc_id.strip()
        if not doc_id:
            raise ParseError("empty document id", number, path)
        if doc_id in seen:
            raise ParseError(f"duplicate document id {doc_id!r}", number, path)
        seen.add(doc_id)
        documents.append(
            Document(
                id=doc_id,
                text=text,
                tokens=tuple(tokenize(text)),
                label_sets=_parse_pairs(pairs, catalog, number, path),
                split=split,
            )
        )
    return documents


def _parse_pairs(
    field: str, catalog: AspectCatalog, number: int, path: str | None
) -> dict[str, tuple[Polarity, ...]]:
    label_sets: dict[str, list[Polarity]] = {}
    for item in field.split(";"):
        item = item.strip()
        if not item:
            continue
        aspect, sep, value = item.rpartition(":")
        if not sep or not aspect:
            raise ParseError(f"malformed label pair {item!r}", number, path)
        if aspect not in catalog:
            raise ParseError(f"unknown aspect {aspect!r}", number, path)
        try:
            polarity = Polarity(value.strip().lower())
        except ValueError:
            raise ParseError(f"unknown polarity {value!r}", number, path) from None
        polarities = label_sets.setdefault(aspect, [])
        if polarity not in polarities:
            polarities.append(polarity)
    return {aspect: tuple(pols) for aspect, pols in label_sets.items()}


def format_document(doc: Document) -> str:
    """One TSV line, without newline."""
    pairs = ";".join(f"{aspect}:{p.value}" for aspect, pols in doc.label_sets.items() for p in pols)
    return f"{doc.id}\t{doc.text}\t{pairs}"


def write_dataset(documents: Sequence[Document], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        for doc in documents:
            f.write(format_document(doc) + "\n")


def parse_catalog(lines: Iterable[str], path: str | None = None) -> AspectCatalog:
    """Catalog from one name per line; blank lines are ignored.

    Raises:
        ParseError: On duplicate or invalid names
    """
    names: list[str] = []
    for number, raw in enumerate(lines, start=1):
        name = raw.strip()
        if not name:
            continue
        if name in names:
            raise ParseError(f"duplicate aspect {name!r}", number, path)
        names.append(name)
    try:
        return AspectCatalog(names=tuple(names))
    except ValueError as exc:
        raise ParseError(f"invalid aspect catalog: {exc}", path=path) from exc


def format_catalog(catalog: AspectCatalog) -> str:
    return "".join(f"{name}\n" for name in catalog.names)
