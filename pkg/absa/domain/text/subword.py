"""Character n-grams and their hashed bucket ids."""

FNV_OFFSET_BASIS = 2166136261
FNV_PRIME = 16777619

BOW = "<"
EOW = ">"


def extract_ngrams(word: str, n_min: int, n_max: int) -> list[str]:
    """Character n-grams of a word wrapped in boundary markers.

    Emits every n-gram of ``<word>`` with ``n_min <= n <= n_max``, ordered by
    n ascending then left to right, followed by the whole bracketed word
    unless it was already emitted as an n-gram. Repeated interior n-grams
    are kept.

    Args:
        word: Non-empty word
        n_min: Smallest n-gram length
        n_max: Largest n-gram length

    Returns:
        N-gram strings
    """
    if not word:
        raise ValueError("extract_ngrams requires a non-empty word")
    if n_min > n_max:
        raise ValueError(f"n_min={n_min} exceeds n_max={n_max}")

    bracketed = f"{BOW}{word}{EOW}"
    length = len(bracketed)
    grams = [
        bracketed[i : i + n]
        for n in range(n_min, min(n_max, length) + 1)
        for i in range(length - n + 1)
    ]
    if bracketed not in grams:
        grams.append(bracketed)
    return grams


def fnv1a_32(text: str) -> int:
    """32-bit FNV-1a hash over the UTF-8 bytes of ``text``."""
    h = FNV_OFFSET_BASIS
    for byte in text.encode("utf-8"):
        h ^= byte
        h = (h * FNV_PRIME) & 0xFFFFFFFF
    return h


def ngram_buckets(word: str, n_min: int, n_max: int, buckets: int) -> list[int]:
    """Bucket ids (FNV-1a modulo bucket count) of every n-gram of ``word``."""
    return [fnv1a_32(gram) % buckets for gram in extract_ngrams(word, n_min, n_max)]
