"""Test container builder with selective unmocking."""

from dishka import Container, make_container

from absa.config import Settings
from absa.util.di import PROVIDERS, Component, get_provider

# Import mock providers to register them as subclasses
from tests.di.persistence import MockPersistenceProvider  # noqa: F401


def build_test_container(settings: Settings, unmock: set[Component] | None = None) -> Container:
    """Build test container with selective unmocking.

    Args:
        settings: Settings placed in the container context
        unmock: Components to use production implementations for.
                All others use mocks if available.

    Returns:
        Configured test container

    Raises:
        ValueError: If unknown components are requested

    Examples:
        # Unit tests - in-memory repositories
        container = build_test_container(settings)

        # Integration tests - files on disk
        container = build_test_container(settings, unmock={"persistence"})
    """
    unmock = unmock or set()
    _validate_unmock(unmock)

    provider_instances = []
    for base in PROVIDERS:
        component_name = getattr(base, "__mock_component__", None)
        use_mock = component_name not in unmock if component_name else False
        provider_instances.append(get_provider(base, use_mock=use_mock)())

    return make_container(*provider_instances, context={Settings: settings})


def _validate_unmock(unmock: set[Component]) -> None:
    """Raises ValueError if ``unmock`` names a component no provider declares."""
    all_components = {
        p.__mock_component__ for p in PROVIDERS if p.__subclasses__() and p.__mock_component__
    }
    unknown = unmock - all_components
    if unknown:
        raise ValueError(f"Unknown components: {unknown}")
