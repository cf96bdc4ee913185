"""File formats and repository implementations."""
