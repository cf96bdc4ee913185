"""Tune model use case."""

from pathlib import Path

import logfire
from pydantic import BaseModel, Field

from absa.config import Settings
from absa.domain.model import ExperimentConfig, HyperConfig, SearchSpace, TrainHistory, TrialRecord
from absa.domain.network import build_network
from absa.domain.repository import ArtifactRepository
from absa.domain.service import SearchService, Trainer
from absa.persistence.reports import to_json, trials_jsonl

from ..base import BaseUseCase
from ..workspace import ExperimentData, ExperimentLoader, network_config

TRIALS_FILE = "trials.jsonl"
BEST_CONFIG_FILE = "best_config.json"


class TuneModelRequest(BaseModel):
    """Tune model request."""

    experiment: ExperimentConfig
    space: SearchSpace
    workers: int = Field(default=1, ge=1)


class TuneModelResponse(BaseModel):
    """Tune model response."""

    best: HyperConfig
    best_dev_f1: float
    trials: list[TrialRecord]
    best_config_path: Path
    trials_path: Path


class TuneModelUseCase(BaseUseCase):
    """Use case for random search over learning rate and batch size."""

    def __init__(
        self,
        loader: ExperimentLoader,
        trainer: Trainer,
        search_service: SearchService,
        artifact_repository: ArtifactRepository,
        settings: Settings,
    ) -> None:
        self.loader = loader
        self.trainer = trainer
        self.search_service = search_service
        self.artifact_repository = artifact_repository
        self.settings = settings

    def execute(self, request: TuneModelRequest) -> TuneModelResponse:
        """Train every sampled cell and keep the one with the best dev F1.

        Pipeline trials skip detector fitting: model selection scores the
        polarity classifier on gold aspects.
        """
        experiment = request.experiment
        out = experiment.output_dir
        with logfire.span(
            "tune_model.execute",
            architecture=experiment.architecture.value,
            trials=request.space.trials,
        ):
            data = self.loader.load(
                experiment.dataset_dir,
                experiment.catalog_path,
                experiment.embeddings_path,
                self.settings.embedding.dim,
            )
            best, log = self.search_service.search(
                request.space,
                request.space.trials,
                experiment.hyper,
                lambda hyper: self._run_trial(data, hyper),
                request.workers,
            )
            self.artifact_repository.write_text(out / TRIALS_FILE, trials_jsonl(log))
            self.artifact_repository.write_text(out / BEST_CONFIG_FILE, to_json(best))
            best_f1 = next(r.dev_f1 for r in log if r.seed == best.seed)
            return TuneModelResponse(
                best=best,
                best_dev_f1=best_f1,
                trials=log,
                best_config_path=out / BEST_CONFIG_FILE,
                trials_path=out / TRIALS_FILE,
            )

    def _run_trial(self, data: ExperimentData, hyper: HyperConfig) -> TrainHistory:
        assert data.table is not None
        config = network_config(self.settings, data.table.dim, hyper.dropout)
        network = build_network(hyper.architecture, data.catalog, data.table, data.training_tokens, config, hyper.seed)
        return self.trainer.train(network, data.train, data.dev, hyper).history
