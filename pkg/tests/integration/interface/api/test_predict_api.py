"""HTTP prediction server over a saved model."""

import io
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from absa import __version__
from absa.config import ServeSettings
from absa.domain.model import HyperConfig
from absa.domain.network import ModelBundle
from absa.domain.service import PredictionService
from absa.domain.value import Architecture, EmbeddingSource
from absa.interface.api.app import create_app
from absa.persistence.error import ArtifactNotFoundError
from absa.persistence.model_store import load_model, save_model
from tests.conftest import toy_catalog, toy_network, toy_settings


@pytest.fixture
def model_path(tmp_path):
    network = toy_network(Architecture.E2E_LSTM, seed=3)
    hyper = HyperConfig(architecture=Architecture.E2E_LSTM, learning_rate=0.01, batch_size=10)
    path = tmp_path / "model.npz"
    save_model(ModelBundle(network=network, embedding_source=EmbeddingSource.FASTTEXT, hyper=hyper), path)
    return path


def client_for(model_path, max_payload_bytes: int = 1024 * 1024) -> TestClient:
    settings = toy_settings(serve=ServeSettings(model_path=model_path, max_payload_bytes=max_payload_bytes))
    return TestClient(create_app(settings))


class TestHealth:
    """Tests for GET /health."""

    def test_reports_served_model(self, model_path):
        with client_for(model_path) as client:
            response = client.get("/health")

        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "healthy"
        assert body["version"] == __version__
        assert body["architecture"] == "e2e-lstm"
        assert body["aspects"] == list(toy_catalog().names)
        assert body["catalog_sha256"] == toy_catalog().fingerprint
        assert body["embedding_source"] == EmbeddingSource.FASTTEXT.value


class TestPredict:
    """Tests for POST /predict."""

    def test_one_record_per_document_in_order(self, model_path):
        # Arrange
        documents = ["zug gut", "", "personal schlecht und ticket normal"]

        # Act
        with client_for(model_path) as client:
            response = client.post("/predict", json={"documents": documents})

        # Assert
        assert response.status_code == 200
        records = response.json()["predictions"]
        assert [r["doc_id"] for r in records] == ["1", "2", "3"]
        assert all(r["error"] is None for r in records)
        catalog = toy_catalog().names
        for record in records:
            aspects = [p["aspect"] for p in record["predictions"]]
            assert aspects == [a for a in catalog if a in aspects]

    def test_agrees_with_line_stream(self, model_path):
        """The server and the stdin predictor give the same records."""
        documents = ["zug gut heute", "ticket schlecht", "die bahn"]
        stream = "".join(d + "\n" for d in documents).encode("utf-8")

        with client_for(model_path) as client:
            served = client.post("/predict", json={"documents": documents}).json()["predictions"]
        streamed = PredictionService(load_model(model_path)).predict_lines(io.BytesIO(stream))

        assert served == [record.model_dump(mode="json") for record in streamed]

    def test_concurrent_requests_match_serial_ones(self, model_path):
        """Requests served in parallel threads get exactly the serial answers."""
        # Arrange
        batches = [[f"zug gut {i}", "personal schlecht", "ticket normal die bahn"][: 1 + i % 3] for i in range(24)]

        # Act
        with client_for(model_path) as client:

            def predict(documents):
                return client.post("/predict", json={"documents": documents}).json()

            serial = [predict(batch) for batch in batches]
            with ThreadPoolExecutor(max_workers=8) as pool:
                parallel = list(pool.map(predict, batches))

        # Assert
        assert parallel == serial

    def test_empty_batch(self, model_path):
        with client_for(model_path) as client:
            response = client.post("/predict", json={"documents": []})

        assert response.status_code == 200
        assert response.json() == {"predictions": []}

    def test_oversized_body_is_rejected(self, model_path):
        with client_for(model_path, max_payload_bytes=64) as client:
            response = client.post("/predict", json={"documents": ["zug gut " * 20]})

        assert response.status_code == 413

    @pytest.mark.parametrize(
        "body",
        [b"{not json", b'{"documents": "zug gut"}', b'{"documents": [1, 2]}'],
    )
    def test_malformed_body_is_rejected(self, model_path, body):
        with client_for(model_path) as client:
            response = client.post("/predict", content=body, headers={"content-type": "application/json"})

        assert response.status_code == 400
        assert response.json()["detail"].startswith("Malformed request body")


class TestStartup:
    """The model is loaded before the first request."""

    def test_missing_model_fails_at_startup(self, tmp_path):
        with pytest.raises(ArtifactNotFoundError):
            with client_for(tmp_path / "missing.npz"):
                pass
