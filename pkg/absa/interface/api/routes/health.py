"""Health check routes."""

from dishka.integrations.fastapi import DishkaRoute, FromDishka
from fastapi import APIRouter
from pydantic import BaseModel

from absa import __version__
from absa.domain.service import PredictionService

router = APIRouter(tags=["health"], route_class=DishkaRoute)


class HealthResponse(BaseModel):
    """Health check response with metadata of the served model."""

    status: str
    version: str
    architecture: str
    catalog_sha256: str
    aspects: list[str]
    embedding_source: str


@router.get("/health", response_model=HealthResponse)
async def health_check(prediction_service: FromDishka[PredictionService]) -> HealthResponse:
    bundle = prediction_service.bundle
    return HealthResponse(
        status="healthy",
        version=__version__,
        architecture=bundle.architecture.value,
        catalog_sha256=bundle.catalog.fingerprint,
        aspects=list(bundle.catalog.names),
        embedding_source=bundle.embedding_source.value,
    )
