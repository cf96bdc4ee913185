"""FastAPI application for serving a trained model."""

from collections.abc import AsyncIterator
from contextlib import asynccontextmanager

import logfire
from dishka import AsyncContainer
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from absa import __version__
from absa.config import Settings
from absa.domain.service import PredictionService
from absa.interface.api.routes import health, predict
from absa.util.di.container import create_async_container, setup_di
from absa.util.observability import instrument_fastapi


def create_app(settings: Settings, container: AsyncContainer | None = None) -> FastAPI:
    """Create the prediction server.

    The model is loaded at startup so that a bad model path fails before
    the first request. Logfire should be configured before calling this.

    Args:
        settings: Settings with ``serve.model_path`` set
        container: DI container; a production container is built when omitted
    """
    container = container or create_async_container(settings)

    @asynccontextmanager
    async def lifespan(app: FastAPI) -> AsyncIterator[None]:
        await container.get(PredictionService)
        yield
        await container.close()

    app_instance = FastAPI(
        title="ABSA prediction server",
        description="Aspect category and polarity predictions for short texts",
        version=__version__,
        lifespan=lifespan,
    )

    instrument_fastapi(app_instance)
    setup_di(app_instance, container)

    app_instance.include_router(health.router)
    app_instance.include_router(predict.router)

    @app_instance.exception_handler(Exception)
    async def unexpected_error(request: Request, exc: Exception) -> JSONResponse:
        logfire.error("Unhandled error", path=request.url.path, error=str(exc))
        return JSONResponse(status_code=500, content={"detail": "Internal server error"})

    return app_instance
