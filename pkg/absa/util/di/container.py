"""Dependency injection containers."""

from dishka import AsyncContainer, Container, make_async_container, make_container
from dishka.integrations.fastapi import FastapiProvider, setup_dishka
from fastapi import FastAPI

from absa.config import Settings
from absa.util.di import PROVIDERS, get_provider


def _production_providers() -> list:
    return [get_provider(base, use_mock=False)() for base in PROVIDERS]


def create_container(settings: Settings) -> Container:
    """Build the production container for CLI commands.

    Args:
        settings: Fully resolved settings (defaults, environment, config file, flags)
    """
    return make_container(*_production_providers(), context={Settings: settings})


def create_async_container(settings: Settings) -> AsyncContainer:
    """Build the production container for the HTTP server."""
    return make_async_container(
        *_production_providers(), FastapiProvider(), context={Settings: settings}
    )


def setup_di(app: FastAPI, container: AsyncContainer) -> None:
    """Setup dependency injection for FastAPI."""
    setup_dishka(container, app)
