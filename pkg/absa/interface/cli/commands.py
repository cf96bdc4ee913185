"""Subcommand handlers.

Each handler receives the parsed arguments, the resolved settings and a
request-scoped DI container, writes its result to ``stdout`` and returns
the exit code. Use cases raise; errors are mapped to exit codes by the caller.
"""

import argparse
from dataclasses import dataclass
from typing import BinaryIO, TextIO

import logfire
import uvicorn
from dishka import Container
from pydantic import BaseModel

from absa.application.usecase.embedding import TrainEmbeddingsRequest, TrainEmbeddingsUseCase
from absa.application.usecase.experiment import (
    BaselineRequest,
    BaselineUseCase,
    CompareRequest,
    CompareUseCase,
)
from absa.application.usecase.model import (
    EvaluateModelRequest,
    EvaluateModelUseCase,
    PredictStreamRequest,
    PredictStreamUseCase,
    TrainModelRequest,
    TrainModelUseCase,
    TuneModelRequest,
    TuneModelUseCase,
)
from absa.application.usecase.workspace import hyper_config, search_space, skipgram_config
from absa.config import Settings
from absa.domain.model import ExperimentConfig
from absa.domain.value import Architecture, EmbeddingSource
from absa.interface.api.app import create_app
from absa.interface.cli.options import require_path
from absa.persistence.reports import to_json


@dataclass
class Streams:
    """Standard streams of one invocation; stdin is read as bytes."""

    stdin: BinaryIO
    stdout: TextIO


def _emit(stdout: TextIO, payload: BaseModel) -> None:
    stdout.write(to_json(payload))
    stdout.flush()


def _experiment(args: argparse.Namespace, settings: Settings) -> ExperimentConfig:
    require_path(args.dataset, "--dataset", "dataset directory")
    require_path(args.embeddings, "--embeddings", "embedding file")
    if settings.catalog_path is not None:
        require_path(settings.catalog_path, "--catalog", "aspect catalog")
    architecture = Architecture(args.architecture)
    return ExperimentConfig(
        dataset_dir=args.dataset,
        embeddings_path=args.embeddings,
        output_dir=args.output_dir,
        catalog_path=settings.catalog_path,
        hyper=hyper_config(settings, architecture, EmbeddingSource(args.embedding_source)),
    )


def cmd_embed_train(args: argparse.Namespace, settings: Settings, container: Container, streams: Streams) -> int:
    require_path(args.corpus, "--corpus", "corpus")
    use_case = container.get(TrainEmbeddingsUseCase)
    response = use_case.execute(
        TrainEmbeddingsRequest(
            corpus_path=args.corpus,
            output_path=args.output,
            config=skipgram_config(settings),
        )
    )
    _emit(streams.stdout, response)
    return 0


def cmd_train(args: argparse.Namespace, settings: Settings, container: Container, streams: Streams) -> int:
    experiment = _experiment(args, settings)
    if args.detector is not None:
        require_path(args.detector, "--detector", "detector file")
    use_case = container.get(TrainModelUseCase)
    response = use_case.execute(TrainModelRequest(experiment=experiment, detector_path=args.detector))
    _emit(streams.stdout, response.dev_report if response.dev_report is not None else response)
    return 0


def cmd_tune(args: argparse.Namespace, settings: Settings, container: Container, streams: Streams) -> int:
    experiment = _experiment(args, settings)
    use_case = container.get(TuneModelUseCase)
    response = use_case.execute(
        TuneModelRequest(
            experiment=experiment,
            space=search_space(settings),
            workers=settings.search.workers,
        )
    )
    _emit(streams.stdout, response.best)
    return 0


def cmd_eval(args: argparse.Namespace, settings: Settings, container: Container, streams: Streams) -> int:
    require_path(args.model, "--model", "model file")
    require_path(args.dataset, "--dataset", "dataset directory")
    use_case = container.get(EvaluateModelUseCase)
    report = use_case.execute(
        EvaluateModelRequest(
            model_path=args.model,
            dataset_dir=args.dataset,
            split=args.split,
            task=args.task,
            catalog_path=settings.catalog_path,
        )
    )
    _emit(streams.stdout, report)
    return 0


def cmd_predict(args: argparse.Namespace, settings: Settings, container: Container, streams: Streams) -> int:
    require_path(args.model, "--model", "model file")
    use_case = container.get(PredictStreamUseCase)
    records = use_case.execute(PredictStreamRequest(model_path=args.model, lines=streams.stdin))
    count = 0
    for record in records:
        streams.stdout.write(record.model_dump_json() + "\n")
        streams.stdout.flush()
        count += 1
    logfire.info("Predictions written", records=count)
    return 0


def cmd_serve(args: argparse.Namespace, settings: Settings, container: Container, streams: Streams) -> int:
    require_path(args.model, "--model", "model file")
    logfire.info("Starting prediction server", host=settings.serve.host, port=settings.serve.port)
    uvicorn.run(create_app(settings), host=settings.serve.host, port=settings.serve.port, log_level="info")
    return 0


def cmd_compare(args: argparse.Namespace, settings: Settings, container: Container, streams: Streams) -> int:
    require_path(args.dataset, "--dataset", "dataset directory")
    require_path(args.embeddings, "--embeddings", "embedding file")
    use_case = container.get(CompareUseCase)
    response = use_case.execute(
        CompareRequest(
            dataset_dir=args.dataset,
            embeddings_path=args.embeddings,
            output_dir=args.output_dir,
            catalog_path=settings.catalog_path,
            architectures=[Architecture(a) for a in args.architectures],
            embedding_source=EmbeddingSource(args.embedding_source),
        )
    )
    _emit(streams.stdout, response.table)
    return 0


def cmd_baseline(args: argparse.Namespace, settings: Settings, container: Container, streams: Streams) -> int:
    require_path(args.dataset, "--dataset", "dataset directory")
    use_case = container.get(BaselineUseCase)
    response = use_case.execute(
        BaselineRequest(
            dataset_dir=args.dataset,
            catalog_path=settings.catalog_path,
            output_dir=args.output_dir,
        )
    )
    _emit(streams.stdout, response)
    return 0
