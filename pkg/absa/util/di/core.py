"""Core DI providers (non-mockable)."""

from dishka import Scope, from_context

from absa.config import Settings
from absa.util.di.base import ProviderBase


class ProdConfigProvider(ProviderBase):
    """Settings come from the container context.

    The CLI resolves them from defaults, environment, config file and flags
    before the container is built.
    """

    settings = from_context(provides=Settings, scope=Scope.APP)
