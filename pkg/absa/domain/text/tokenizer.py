"""Whitespace tokenizer for short social media texts.

Rules, applied per whitespace-separated chunk after lowercasing:

- URLs (``http://``, ``https://``, ``www.``) and @-mentions / #-hashtags are
  kept as single tokens.
- Leading and trailing punctuation characters are split off, one token per
  character. Interior punctuation ("z.b", "s-bahn") stays in the word.

The tokenizer is idempotent: tokenizing the space-joined output of
``tokenize`` returns the same sequence.
"""

import re
import unicodedata

_URL = re.compile(r"^(?:https?://|www\.)\S+$")
_HANDLE = re.compile(r"^[@#]\w")


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _split_chunk(chunk: str) -> list[str]:
    tokens: list[str] = []

    while chunk and _is_punct(chunk[0]) and not _HANDLE.match(chunk):
        tokens.append(chunk[0])
        chunk = chunk[1:]

    if not chunk:
        return tokens

    if _URL.match(chunk):
        tokens.append(chunk)
        return tokens

    trailing: list[str] = []
    while chunk and _is_punct(chunk[-1]):
        trailing.append(chunk[-1])
        chunk = chunk[:-1]

    if chunk:
        tokens.append(chunk)
    tokens.extend(reversed(trailing))
    return tokens


def tokenize(text: str) -> list[str]:
    """Split text into lowercase tokens.

    Args:
        text: Raw document text

    Returns:
        Token sequence (empty for empty or whitespace-only input)
    """
    tokens: list[str] = []
    for chunk in text.lower().split():
        tokens.extend(_split_chunk(chunk))
    return tokens
