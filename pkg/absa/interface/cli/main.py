"""``absa`` command-line entry point."""

import argparse
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import BinaryIO, TextIO

import logfire
from dishka import Container
from pydantic import ValidationError

from absa import __version__
from absa.config import Settings
from absa.domain.error import DomainError
from absa.domain.value import Architecture, EmbeddingSource, Split, TaskMode
from absa.interface.cli import commands
from absa.interface.cli.commands import Streams
from absa.interface.cli.options import resolve_settings
from absa.interface.error import InterfaceError, UsageError
from absa.persistence.error import PersistenceError
from absa.util.di.container import create_container
from absa.util.error import UtilError
from absa.util.logging import setup_logging
from absa.util.observability import configure_logfire

Handler = Callable[[argparse.Namespace, Settings, Container, Streams], int]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="TOML settings file; explicit flags win")
    parser.add_argument("--seed", type=int, help="Random seed (default 42)")
    parser.add_argument("--catalog", type=Path, help="Aspect catalog, one name per line")
    parser.add_argument("--debug", action="store_true", help="Verbose logging")


def _data(parser: argparse.ArgumentParser, embeddings: bool = True) -> None:
    parser.add_argument("--dataset", type=Path, required=True, help="Dataset directory with train.tsv, dev.tsv, ...")
    if embeddings:
        parser.add_argument("--embeddings", type=Path, required=True, help="Embedding file")
        parser.add_argument(
            "--embedding-source",
            choices=[s.value for s in EmbeddingSource],
            default=EmbeddingSource.OTHER.value,
            help="Algorithm that produced the embeddings; selects the reference scores",
        )
        parser.add_argument("--dim", type=int, help="Expected embedding dimension")


def _training(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--learning-rate", type=float, help="Default: 0.03 for CNN, 0.01 for LSTM")
    parser.add_argument("--batch-size", type=int, help="Default: 5 for CNN, 10 for LSTM")
    parser.add_argument("--epochs", type=int, help="Epoch cap (default 200)")
    parser.add_argument("--patience", type=int, help="Early-stopping patience in epochs (default 10)")
    parser.add_argument("--dropout", type=float, help="Dropout rate (default 0.5)")
    parser.add_argument("--filters", type=int, help="CNN filters per width (default 300)")
    parser.add_argument("--hidden-size", type=int, help="LSTM hidden size per direction (default 200)")
    parser.add_argument("--record-wall-clock", action="store_true", help="Record epoch seconds in the history")


def _architecture(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--architecture",
        choices=[a.value for a in Architecture],
        default=Architecture.E2E_CNN.value,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="absa", description="Aspect-based sentiment analysis experiments")
    parser.add_argument("--version", action="version", version=f"absa {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed-train", help="Train subword skip-gram embeddings on a corpus")
    _common(p)
    p.add_argument("--corpus", type=Path, required=True, help="Plain-text corpus, one document per line")
    p.add_argument("--output", type=Path, required=True, help="Embedding file to write")
    p.add_argument("--dim", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--negatives", type=int)
    p.add_argument("--epochs", dest="embedding_epochs", type=int)
    p.add_argument("--learning-rate", dest="embedding_learning_rate", type=float)
    p.add_argument("--min-count", type=int)
    p.add_argument("--buckets", type=int)
    p.add_argument("--min-n", type=int)
    p.add_argument("--max-n", type=int)
    p.set_defaults(handler=commands.cmd_embed_train)

    p = sub.add_parser("train", help="Train one architecture and save the best dev epoch")
    _common(p)
    _data(p)
    _architecture(p)
    _training(p)
    p.add_argument("--output-dir", type=Path, required=True)
    p.add_argument(
        "--detector",
        type=Path,
        help="Reuse a trained detector file for pipeline architectures instead of fitting one",
    )
    p.set_defaults(handler=commands.cmd_train)

    p = sub.add_parser("tune", help="Random search over learning rate and batch size")
    _common(p)
    _data(p)
    _architecture(p)
    _training(p)
    p.add_argument("--output-dir", type=Path, required=True)
    p.add_argument("--trials", type=int, help="Trial budget (default 15)")
    p.add_argument("--workers", type=int, help="Trials trained concurrently (default 1)")
    p.set_defaults(handler=commands.cmd_tune)

    p = sub.add_parser("eval", help="Score a saved model on one split")
    _common(p)
    p.add_argument("--model", type=Path, required=True)
    _data(p, embeddings=False)
    p.add_argument("--split", choices=[s.value for s in Split], default=Split.DEV.value)
    p.add_argument("--task", choices=[t.value for t in TaskMode], default=TaskMode.ASPECT_SENTIMENT.value)
    p.set_defaults(handler=commands.cmd_eval)

    p = sub.add_parser("predict", help="Predict one document per stdin line as JSON lines")
    _common(p)
    p.add_argument("--model", type=Path, required=True)
    p.set_defaults(handler=commands.cmd_predict)

    p = sub.add_parser("serve", help="Serve a saved model over HTTP")
    _common(p)
    p.add_argument("--model", type=Path, required=True)
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.add_argument("--max-payload-bytes", type=int)
    p.set_defaults(handler=commands.cmd_serve)

    p = sub.add_parser("compare", help="Train and score several architectures side by side")
    _common(p)
    _data(p)
    _training(p)
    p.add_argument("--output-dir", type=Path, required=True)
    p.add_argument(
        "--architectures",
        nargs="+",
        choices=[a.value for a in Architecture],
        default=[a.value for a in Architecture],
    )
    p.set_defaults(handler=commands.cmd_compare)

    p = sub.add_parser("baseline", help="Score the majority-class baseline on every split")
    _common(p)
    _data(p, embeddings=False)
    p.add_argument("--output-dir", type=Path)
    p.set_defaults(handler=commands.cmd_baseline)

    return parser


def run(
    argv: Sequence[str] | None = None,
    stdin: BinaryIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Parse ``argv``, run the command and return its exit code.

    0 on success, 1 when the command fails, 2 on usage errors.
    """
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code in (0, None) else EXIT_USAGE

    try:
        settings = resolve_settings(args)
    except (UsageError, ValidationError) as e:
        print(f"absa {args.command}: error: {e}", file=stderr)
        return EXIT_USAGE

    configure_logfire(settings)
    setup_logging(settings)
    streams = Streams(stdin=stdin or sys.stdin.buffer, stdout=stdout or sys.stdout)
    handler: Handler = args.handler

    container = create_container(settings)
    try:
        with logfire.span("cli.{command}", command=args.command, seed=settings.seed):
            with container() as request_container:
                return handler(args, settings, request_container, streams)
    except (UsageError, ValidationError) as e:
        print(f"absa {args.command}: error: {e}", file=stderr)
        return EXIT_USAGE
    except (DomainError, PersistenceError, InterfaceError, UtilError) as e:
        logfire.error("Command failed", command=args.command, error=str(e), error_type=type(e).__name__)
        print(f"absa {args.command}: error: {e}", file=stderr)
        return EXIT_FAILURE
    finally:
        container.close()
