"""Observability configuration using Logfire.

Usage:
    import logfire

    # Structured logging
    logfire.info("Epoch finished", epoch=3, loss=1.25, dev_f1=0.41)

    # Manual spans for coarse operations (commands, epochs, trials)
    with logfire.span("train", architecture="e2e-cnn"):
        ...

Per-example work inside training loops is never logged individually.
"""

import sys
from typing import Any

import logfire
from fastapi import FastAPI

from absa import __version__
from absa.config import Settings


def configure_logfire(settings: Settings, service_name: str = "absa") -> None:
    """Configure Logfire for observability.

    Console output goes to stderr. Cloud sending is enabled only when a
    token is configured or ``send_to_logfire`` is set explicitly.

    Args:
        settings: Application settings
        service_name: Service name reported with every record
    """
    # Priority: explicit setting > token presence > default (False)
    if settings.observability.send_to_logfire is not None:
        send_to_logfire = settings.observability.send_to_logfire
    elif settings.observability.logfire_token:
        send_to_logfire = True
    else:
        send_to_logfire = False

    config_kwargs: dict[str, Any] = {
        "service_name": service_name,
        "service_version": __version__,
        "environment": settings.environment,
        "send_to_logfire": send_to_logfire,
        "console": (
            logfire.ConsoleOptions(
                colors="auto",
                span_style="show-parents",
                include_timestamps=True,
                verbose=settings.debug,
                output=sys.stderr,
            )
            if settings.observability.console
            else False
        ),
    }

    if settings.observability.logfire_token:
        config_kwargs["token"] = settings.observability.logfire_token

    logfire.configure(**config_kwargs)

    logfire.debug(
        "Observability configured",
        environment=settings.environment,
        debug=settings.debug,
        send_to_logfire=send_to_logfire,
        has_token=bool(settings.observability.logfire_token),
    )


def instrument_fastapi(app: FastAPI) -> None:
    """Instrument the prediction server with Logfire.

    Args:
        app: FastAPI application instance
    """

    def _map_request_attributes(request, attributes):
        """Map request attributes, handling both HTTP and WebSocket requests."""
        result = {**attributes}

        if hasattr(request, "method"):
            result["method"] = request.method
        if hasattr(request, "url"):
            result["path"] = request.url.path
        if hasattr(request, "client") and request.client:
            result["client_host"] = request.client.host

        return result

    logfire.instrument_fastapi(
        app,
        request_attributes_mapper=_map_request_attributes,
        excluded_urls=["/health"],  # Exclude noisy health checks
    )
    logfire.debug("FastAPI instrumented")
