"""Logging configuration for the application."""

import logging
import sys

from absa.config import Settings


def setup_logging(settings: Settings) -> None:
    """Configure application logging.

    Logs go to stderr so that commands streaming JSON on stdout
    (``absa predict``) keep a clean output channel.

    Args:
        settings: Application settings
    """
    level = logging.DEBUG if settings.debug else logging.INFO

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
        force=True,  # Override any existing configuration
    )

    # Set third-party loggers to WARNING to reduce noise
    logging.getLogger("httpx").setLevel(logging.WARNING)
    logging.getLogger("httpcore").setLevel(logging.WARNING)
    logging.getLogger("uvicorn.access").setLevel(logging.WARNING)

    logging.getLogger("absa").setLevel(level)

    logger = logging.getLogger(__name__)
    logger.debug(
        f"Logging configured: environment={settings.environment}, level={logging.getLevelName(level)}"
    )

