"""Unit tests for CompareUseCase."""

import json

from absa.application.usecase.experiment import CompareRequest, CompareUseCase
from absa.application.usecase.experiment.compare import COMPARISON_FILE
from absa.domain.model import ComparisonTable
from absa.domain.repository import ArtifactRepository
from absa.domain.service import MAJORITY_BASELINE
from absa.domain.value import Architecture, EmbeddingSource, Split, TaskMode
from tests.conftest import CATALOG_PATH, DATASET_DIR, EMBEDDINGS_PATH, OUTPUT_DIR, seed_repositories
from tests.harness import create_env_fixture

# Unit test fixture
unit_env = create_env_fixture()


class TestCompareUseCase:
    """Tests for CompareUseCase."""

    def test_compares_requested_architectures(self, unit_env):
        # Arrange
        seed_repositories(unit_env)
        request = CompareRequest(
            dataset_dir=DATASET_DIR,
            embeddings_path=EMBEDDINGS_PATH,
            output_dir=OUTPUT_DIR,
            catalog_path=CATALOG_PATH,
            architectures=[Architecture.E2E_CNN, Architecture.PIPE_CNN],
            embedding_source=EmbeddingSource.GLOVE,
        )

        # Act
        response = unit_env.get(CompareUseCase).execute(request)

        # Assert
        systems = [MAJORITY_BASELINE, "e2e-cnn", "pipe-cnn"]
        assert sorted({r.system for r in response.table.rows}) == sorted(systems)
        assert len(response.table.rows) == len(systems) * 3 * 2
        assert response.table.f1("pipe-cnn", Split.TEST_DIA, TaskMode.ASPECT_SENTIMENT) is not None

        saved = ComparisonTable.model_validate(
            json.loads(unit_env.get(ArtifactRepository).read_text(OUTPUT_DIR / COMPARISON_FILE))
        )
        assert saved == response.table

    def test_same_seed_same_table(self, unit_env):
        seed_repositories(unit_env)
        request = CompareRequest(
            dataset_dir=DATASET_DIR,
            embeddings_path=EMBEDDINGS_PATH,
            output_dir=OUTPUT_DIR,
            catalog_path=CATALOG_PATH,
            architectures=[Architecture.E2E_LSTM],
        )
        use_case = unit_env.get(CompareUseCase)

        assert use_case.execute(request).table == use_case.execute(request).table
