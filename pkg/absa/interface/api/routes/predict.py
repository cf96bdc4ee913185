"""Prediction routes."""

import logfire
from dishka.integrations.fastapi import DishkaRoute, FromDishka
from fastapi import APIRouter, HTTPException, Request, status
from pydantic import ValidationError
from starlette.concurrency import run_in_threadpool

from absa.application.usecase.model import (
    PredictDocumentsRequest,
    PredictDocumentsResponse,
    PredictDocumentsUseCase,
)
from absa.config import Settings
from absa.interface.error import PayloadTooLargeError

router = APIRouter(tags=["predict"], route_class=DishkaRoute)


async def read_limited_body(request: Request, limit: int) -> bytes:
    """Request body, refusing to buffer more than ``limit`` bytes.

    Raises:
        PayloadTooLargeError: If the declared or actual size exceeds ``limit``
    """
    declared = request.headers.get("content-length")
    if declared is not None and declared.isdigit() and int(declared) > limit:
        raise PayloadTooLargeError(int(declared), limit)
    body = bytearray()
    async for chunk in request.stream():
        body.extend(chunk)
        if len(body) > limit:
            raise PayloadTooLargeError(len(body), limit)
    return bytes(body)


@router.post(
    "/predict",
    response_model=PredictDocumentsResponse,
    summary="Predict aspects and polarities",
    description="One prediction record per document, in request order.",
)
async def predict(
    request: Request,
    settings: FromDishka[Settings],
    use_case: FromDishka[PredictDocumentsUseCase],
) -> PredictDocumentsResponse:
    """Predict over ``{"documents": [...]}``.

    Example:
        POST /predict {"documents": ["die bahn ist pünktlich"]}
    """
    try:
        body = await read_limited_body(request, settings.serve.max_payload_bytes)
    except PayloadTooLargeError as e:
        raise HTTPException(status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE, detail=str(e))
    try:
        payload = PredictDocumentsRequest.model_validate_json(body)
    except ValidationError as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=f"Malformed request body: {e.errors(include_url=False)[0]['msg']}",
        )
    with logfire.span("api.predict", documents=len(payload.documents)):
        return await run_in_threadpool(use_case.execute, payload)
