"""Dependency injection module."""

from absa.util.di.application import ProdApplicationProvider
from absa.util.di.base import Component, ProviderBase
from absa.util.di.core import ProdConfigProvider
from absa.util.di.domain import ProdDomainProvider
from absa.util.di.persistence import PersistenceProvider, ProdPersistenceProvider
from absa.util.di.serving import ProdServingProvider
from absa.util.error import DependencyInjectionError

# Single list - all providers treated uniformly
PROVIDERS: list[type[ProviderBase]] = [
    # Core providers (not mockable)
    ProdConfigProvider,
    ProdDomainProvider,
    ProdApplicationProvider,
    ProdServingProvider,
    # Infrastructure components (mockable)
    PersistenceProvider,
]


def get_provider(base: type[ProviderBase], use_mock: bool = False) -> type[ProviderBase]:
    """Get appropriate provider class.

    Automatically determines if provider is mockable by checking for subclasses.

    - No subclasses: Concrete provider, use directly
    - Has subclasses: Mockable component, select by __is_mock__ flag

    Raises:
        DependencyInjectionError: If requested implementation not found
    """
    subclasses = base.__subclasses__()

    if not subclasses:
        return base

    impl = next(
        (c for c in subclasses if getattr(c, "__is_mock__", False) == use_mock),
        None,
    )

    if not impl:
        component_name = getattr(base, "__mock_component__", None) or base.__name__
        raise DependencyInjectionError(component_name, use_mock)

    return impl


__all__ = [
    "Component",
    "ProviderBase",
    "PROVIDERS",
    "get_provider",
    # Core providers
    "ProdApplicationProvider",
    "ProdConfigProvider",
    "ProdDomainProvider",
    "ProdServingProvider",
    # Infrastructure
    "PersistenceProvider",
    "ProdPersistenceProvider",
]
