"""Interface layer errors."""


class InterfaceError(Exception):
    """Base interface error."""

    pass


class UsageError(InterfaceError):
    """Invalid command-line input that argparse cannot catch (missing paths, bad config file)."""

    pass


class PayloadTooLargeError(InterfaceError):
    """Request body exceeds the configured limit."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"Payload of {size} bytes exceeds the limit of {limit} bytes")
