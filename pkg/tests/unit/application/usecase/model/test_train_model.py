"""Unit tests for TrainModelUseCase."""

import json

import numpy as np
import pytest

from absa.application.usecase.model import TrainModelRequest, TrainModelUseCase
from absa.application.usecase.model.train_model import (
    CONFIG_FILE,
    CONFLICTS_FILE,
    DETECTOR_FILE,
    DEV_REPORT_FILE,
    HISTORY_FILE,
    MODEL_FILE,
)
from absa.application.usecase.workspace import hyper_config
from absa.domain.error import InvalidConfigurationError
from absa.domain.model import ExperimentConfig
from absa.domain.repository import ArtifactRepository, EmbeddingRepository, ModelRepository
from absa.domain.value import Architecture, Split
from absa.persistence.error import ArtifactNotFoundError
from tests.conftest import (
    CATALOG_PATH,
    DATASET_DIR,
    EMBEDDINGS_PATH,
    OUTPUT_DIR,
    seed_repositories,
    synthetic_splits,
    toy_catalog,
    toy_table,
)
from tests.harness import create_env_fixture

# Unit test fixture
unit_env = create_env_fixture()


def request_for(settings, architecture: Architecture, **overrides) -> TrainModelRequest:
    experiment = ExperimentConfig(
        dataset_dir=DATASET_DIR,
        embeddings_path=EMBEDDINGS_PATH,
        output_dir=OUTPUT_DIR,
        catalog_path=CATALOG_PATH,
        hyper=hyper_config(settings, architecture),
    )
    return TrainModelRequest(experiment=experiment, **overrides)


class TestTrainModelUseCase:
    """Tests for TrainModelUseCase."""

    def test_train_writes_all_artifacts(self, unit_env, settings):
        """Model, history, effective config, conflict and dev reports are persisted."""
        # Arrange
        seed_repositories(unit_env)
        use_case = unit_env.get(TrainModelUseCase)
        artifacts = unit_env.get(ArtifactRepository)

        # Act
        response = use_case.execute(request_for(settings, Architecture.E2E_CNN))

        # Assert
        assert response.model_path == OUTPUT_DIR / MODEL_FILE
        assert response.detector_path is None
        assert response.conflicts.dropped == 1
        assert response.dev_report.split is Split.DEV
        assert set(artifacts.files) == {
            OUTPUT_DIR / name for name in (CONFIG_FILE, CONFLICTS_FILE, HISTORY_FILE, DEV_REPORT_FILE)
        }
        assert artifacts.read_text(OUTPUT_DIR / HISTORY_FILE).count("\n") == response.epochs + 1

        # Verify the model was saved
        bundle = unit_env.get(ModelRepository).load(OUTPUT_DIR / MODEL_FILE)
        assert bundle.architecture is Architecture.E2E_CNN
        assert bundle.hyper.seed == settings.seed

    def test_effective_config_records_seed_and_settings(self, unit_env, settings):
        seed_repositories(unit_env)
        unit_env.get(TrainModelUseCase).execute(request_for(settings, Architecture.E2E_CNN))

        config = json.loads(unit_env.get(ArtifactRepository).read_text(OUTPUT_DIR / CONFIG_FILE))

        assert config["seed"] == settings.seed
        assert config["settings"]["embedding"]["dim"] == 8
        assert "observability" not in config["settings"]
        assert config["experiment"]["hyper"]["architecture"] == "e2e-cnn"

    def test_pipeline_saves_standalone_detector(self, unit_env, settings):
        seed_repositories(unit_env)

        response = unit_env.get(TrainModelUseCase).execute(request_for(settings, Architecture.PIPE_CNN))

        assert response.detector_path == OUTPUT_DIR / DETECTOR_FILE
        arrays = unit_env.get(ModelRepository).load_detector(response.detector_path, toy_catalog())
        assert arrays["detector.weights"].shape == (3, 8)

    def test_pipeline_reuses_given_detector(self, unit_env, settings):
        """A supplied detector is installed as is and not written again."""
        # Arrange
        seed_repositories(unit_env)
        use_case = unit_env.get(TrainModelUseCase)
        first = use_case.execute(request_for(settings, Architecture.PIPE_CNN))
        models = unit_env.get(ModelRepository)
        saved = models.load_detector(first.detector_path, toy_catalog())

        # Act
        second = use_case.execute(request_for(settings, Architecture.PIPE_LSTM, detector_path=first.detector_path))

        # Assert
        assert second.detector_path is None
        detector = models.load(second.model_path).network.detector
        np.testing.assert_array_equal(detector.weights, saved["detector.weights"])
        np.testing.assert_array_equal(detector.thresholds, saved["detector.thresholds"])

    def test_missing_embeddings(self, unit_env, settings):
        seed_repositories(unit_env)
        request = request_for(settings, Architecture.E2E_CNN)
        request.experiment = request.experiment.model_copy(update={"embeddings_path": DATASET_DIR / "none.txt"})

        with pytest.raises(ArtifactNotFoundError, match="Embedding file not found"):
            unit_env.get(TrainModelUseCase).execute(request)

        # The configuration echo precedes loading
        assert OUTPUT_DIR / CONFIG_FILE in unit_env.get(ArtifactRepository).files

    def test_missing_train_split(self, unit_env, settings):
        splits = synthetic_splits()
        del splits[Split.TRAIN]
        seed_repositories(unit_env, splits)

        with pytest.raises(ArtifactNotFoundError, match="train"):
            unit_env.get(TrainModelUseCase).execute(request_for(settings, Architecture.E2E_CNN))

    def test_embedding_dimension_must_match_settings(self, unit_env, settings):
        seed_repositories(unit_env)
        unit_env.get(EmbeddingRepository).save(toy_table(dim=4), EMBEDDINGS_PATH)

        with pytest.raises(InvalidConfigurationError, match="dimension 4"):
            unit_env.get(TrainModelUseCase).execute(request_for(settings, Architecture.E2E_CNN))

    def test_without_dev_split_no_dev_report(self, unit_env, settings):
        splits = synthetic_splits()
        del splits[Split.DEV]
        seed_repositories(unit_env, splits)

        response = unit_env.get(TrainModelUseCase).execute(request_for(settings, Architecture.E2E_CNN))

        assert response.dev_report is None
        assert OUTPUT_DIR / DEV_REPORT_FILE not in unit_env.get(ArtifactRepository).files
