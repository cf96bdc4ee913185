"""Integration tests for repository implementations."""
