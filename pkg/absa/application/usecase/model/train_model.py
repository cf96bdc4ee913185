"""Train model use case."""

from pathlib import Path
from typing import Any

import logfire
from pydantic import BaseModel

from absa.config import Settings
from absa.domain.model import ConflictReport, EvalReport, ExperimentConfig
from absa.domain.network import LogisticAspectDetector, PipelineNetwork
from absa.domain.repository import ArtifactRepository, ModelRepository
from absa.domain.service import EvaluationService, Trainer
from absa.domain.value import Split, TaskMode
from absa.persistence.reports import history_csv, to_json

from ..base import BaseUseCase
from ..workspace import ExperimentLoader, train_bundle

MODEL_FILE = "model.npz"
DETECTOR_FILE = "detector.npz"
HISTORY_FILE = "history.csv"
CONFIG_FILE = "config.json"
CONFLICTS_FILE = "conflicts.json"
DEV_REPORT_FILE = "dev_report.json"


class TrainModelRequest(BaseModel):
    """Train model request."""

    experiment: ExperimentConfig
    # Reuse a standalone detector instead of fitting one (pipeline architectures only)
    detector_path: Path | None = None


class TrainModelResponse(BaseModel):
    """Train model response."""

    model_path: Path
    history_path: Path
    detector_path: Path | None
    epochs: int
    best_epoch: int | None
    stopped_early: bool
    conflicts: ConflictReport
    dev_report: EvalReport | None


class TrainModelUseCase(BaseUseCase):
    """Use case for training one architecture and persisting its best dev epoch."""

    def __init__(
        self,
        loader: ExperimentLoader,
        trainer: Trainer,
        evaluation_service: EvaluationService,
        model_repository: ModelRepository,
        artifact_repository: ArtifactRepository,
        settings: Settings,
    ) -> None:
        self.loader = loader
        self.trainer = trainer
        self.evaluation_service = evaluation_service
        self.model_repository = model_repository
        self.artifact_repository = artifact_repository
        self.settings = settings

    def execute(self, request: TrainModelRequest) -> TrainModelResponse:
        """Execute the training flow.

        Steps:
        1. Echo the effective configuration into the output directory
        2. Load catalog, splits (conflict-filtered train) and embeddings
        3. Train, keeping the best dev epoch
        4. Persist model, history, conflict report and dev report

        Raises:
            ArtifactNotFoundError: If an input path does not exist
            TrainingDivergedError: If a batch loss is not finite
        """
        experiment = request.experiment
        out = experiment.output_dir
        with logfire.span(
            "train_model.execute",
            architecture=experiment.architecture.value,
            seed=experiment.seed,
            output_dir=str(out),
        ):
            self.artifact_repository.write_text(out / CONFIG_FILE, to_json(self._effective_config(experiment)))

            data = self.loader.load(
                experiment.dataset_dir,
                experiment.catalog_path,
                experiment.embeddings_path,
                self.settings.embedding.dim,
            )
            self.artifact_repository.write_text(out / CONFLICTS_FILE, to_json(data.conflicts))

            detector_arrays = None
            if request.detector_path is not None and experiment.architecture.is_pipeline:
                detector_arrays = self.model_repository.load_detector(request.detector_path, data.catalog)

            bundle, result = train_bundle(data, experiment.hyper, self.settings, self.trainer, detector_arrays)
            self.artifact_repository.write_text(out / HISTORY_FILE, history_csv(result.history))
            self.model_repository.save(bundle, out / MODEL_FILE)

            detector_path = None
            network = bundle.network
            if isinstance(network, PipelineNetwork) and detector_arrays is None:
                detector = network.detector
                if isinstance(detector, LogisticAspectDetector) and detector.trained:
                    detector_path = out / DETECTOR_FILE
                    self.model_repository.save_detector(detector, data.catalog, detector_path)

            dev_report = None
            if data.dev:
                dev_report = self.evaluation_service.evaluate(
                    network, data.dev, TaskMode.ASPECT_SENTIMENT, Split.DEV, bundle.embedding_source
                )
                self.artifact_repository.write_text(out / DEV_REPORT_FILE, to_json(dev_report))

            history = result.history
            logfire.info(
                "Model trained",
                epochs=len(history.epochs),
                best_epoch=history.best_epoch,
                dev_f1=dev_report.f1 if dev_report else None,
            )
            return TrainModelResponse(
                model_path=out / MODEL_FILE,
                history_path=out / HISTORY_FILE,
                detector_path=detector_path,
                epochs=len(history.epochs),
                best_epoch=history.best_epoch,
                stopped_early=history.stopped_early,
                conflicts=data.conflicts,
                dev_report=dev_report,
            )

    def _effective_config(self, experiment: ExperimentConfig) -> dict[str, Any]:
        return {
            "experiment": experiment.model_dump(mode="json"),
            "settings": self.settings.model_dump(mode="json", exclude={"observability"}),
            "seed": experiment.seed,
        }
