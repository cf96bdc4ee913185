"""Resolution of effective settings for a CLI invocation.

Precedence, lowest first: defaults, ``ABSA_`` environment variables, the
``--config`` TOML file, explicit flags.
"""

import argparse
import tomllib
from pathlib import Path
from typing import Any

from absa.config import Settings
from absa.interface.error import UsageError

# Flag destination -> dotted settings key
FLAG_SETTINGS: dict[str, str] = {
    "seed": "seed",
    "catalog": "catalog_path",
    "debug": "debug",
    # Embeddings
    "dim": "embedding.dim",
    "window": "embedding.window",
    "negatives": "embedding.negatives",
    "embedding_epochs": "embedding.epochs",
    "embedding_learning_rate": "embedding.learning_rate",
    "min_count": "embedding.min_count",
    "buckets": "embedding.buckets",
    "min_n": "embedding.min_n",
    "max_n": "embedding.max_n",
    # Network
    "filters": "network.filters",
    "hidden_size": "network.hidden_size",
    "dropout": "network.dropout",
    # Training
    "learning_rate": "training.learning_rate",
    "batch_size": "training.batch_size",
    "epochs": "training.epochs",
    "patience": "training.patience",
    "record_wall_clock": "training.record_wall_clock",
    # Search
    "trials": "search.trials",
    "workers": "search.workers",
    # Serving
    "host": "serve.host",
    "port": "serve.port",
    "max_payload_bytes": "serve.max_payload_bytes",
    "model": "serve.model_path",
}


def _nest(dotted: str, value: Any) -> dict[str, Any]:
    head, _, rest = dotted.partition(".")
    return {head: _nest(rest, value) if rest else value}


def deep_merge(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Recursive dict merge; values of ``override`` win."""
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def read_config_file(path: Path) -> dict[str, Any]:
    """Raises UsageError if the file is missing or not valid TOML."""
    if not path.is_file():
        raise UsageError(f"--config: file not found: {path}")
    try:
        with path.open("rb") as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise UsageError(f"--config: invalid TOML in {path}: {e}") from e


def flag_overrides(args: argparse.Namespace) -> dict[str, Any]:
    """Settings given explicitly on the command line (flags left unset are skipped)."""
    overrides: dict[str, Any] = {}
    for dest, dotted in FLAG_SETTINGS.items():
        value = getattr(args, dest, None)
        if value is None or value is False:
            continue
        if isinstance(value, Path):
            value = str(value)
        overrides = deep_merge(overrides, _nest(dotted, value))
    return overrides


def resolve_settings(args: argparse.Namespace) -> Settings:
    """Effective settings for a parsed command line.

    Raises:
        UsageError: If the config file cannot be read
        pydantic.ValidationError: If a value is out of range
    """
    values: dict[str, Any] = {}
    if getattr(args, "config", None) is not None:
        values = read_config_file(args.config)
    values = deep_merge(values, flag_overrides(args))
    return Settings(**values)


def require_path(path: Path, flag: str, what: str = "file") -> Path:
    """Raises UsageError naming ``flag`` if ``path`` does not exist."""
    if not path.exists():
        raise UsageError(f"{flag}: {what} not found: {path}")
    return path
