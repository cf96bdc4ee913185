"""Base service class for domain services."""


class Service:
    """Base class for all domain services.

    Domain services hold the algorithms that span several models: data
    preparation, training, search and evaluation.
    """

    pass
