"""Aspect-based sentiment analysis with jointly trained aspect and polarity heads."""

__version__ = "0.1.0"


def main() -> int:
    """Console entry point for the ``absa`` command."""
    from absa.interface.cli.main import run

    return run()
