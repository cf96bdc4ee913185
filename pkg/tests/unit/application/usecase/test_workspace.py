"""Unit tests for experiment loading and hyperparameter resolution."""

import pytest

from absa.application.usecase import ExperimentLoader
from absa.application.usecase.workspace import hyper_config, network_config, train_bundle
from absa.config import TrainingSettings
from absa.domain.error import InvalidConfigurationError
from absa.domain.service import Trainer
from absa.domain.value import Architecture, EmbeddingSource, Split
from tests.conftest import CATALOG_PATH, DATASET_DIR, EMBEDDINGS_PATH, seed_repositories, toy_settings
from tests.harness import create_env_fixture

# Unit test fixture
unit_env = create_env_fixture()


class TestHyperConfig:
    """Tests for hyper_config."""

    def test_family_defaults_when_unset(self):
        settings = toy_settings(training=TrainingSettings(epochs=1))

        cnn = hyper_config(settings, Architecture.E2E_CNN)
        lstm = hyper_config(settings, Architecture.PIPE_LSTM)

        assert (cnn.learning_rate, cnn.batch_size, cnn.clip_norm) == (0.03, 5, None)
        assert (lstm.learning_rate, lstm.batch_size, lstm.clip_norm) == (0.01, 10, 5.0)

    def test_configured_values_win(self, settings):
        hyper = hyper_config(settings, Architecture.E2E_LSTM, EmbeddingSource.GLOVE, seed=3)
        assert (hyper.learning_rate, hyper.batch_size, hyper.seed) == (0.2, 4, 3)
        assert hyper.embedding_source is EmbeddingSource.GLOVE

    def test_dropout_follows_network_settings(self, settings):
        assert hyper_config(settings, Architecture.E2E_CNN).dropout == settings.network.dropout
        assert network_config(settings, 8, dropout=0.0).dropout == 0.0


class TestExperimentLoader:
    """Tests for ExperimentLoader."""

    def test_training_split_is_conflict_filtered(self, unit_env):
        seed_repositories(unit_env)

        data = unit_env.get(ExperimentLoader).load(DATASET_DIR, CATALOG_PATH, EMBEDDINGS_PATH, 8)

        assert data.conflicts.dropped == 1
        assert len(data.train) == 31
        assert list(data.evaluation_splits()) == [Split.DEV, Split.TEST_SYN, Split.TEST_DIA]
        assert data.table.dim == 8

    def test_missing_test_splits_are_skipped(self, unit_env, splits):
        seed_repositories(unit_env, {Split.TRAIN: splits[Split.TRAIN], Split.DEV: splits[Split.DEV]})

        data = unit_env.get(ExperimentLoader).load(DATASET_DIR, CATALOG_PATH)

        assert data.tests == {}
        assert data.table is None

    def test_training_needs_a_table(self, unit_env, settings):
        seed_repositories(unit_env)
        data = unit_env.get(ExperimentLoader).load(DATASET_DIR, CATALOG_PATH)

        with pytest.raises(InvalidConfigurationError, match="embedding table"):
            train_bundle(data, hyper_config(settings, Architecture.E2E_CNN), settings, Trainer())
