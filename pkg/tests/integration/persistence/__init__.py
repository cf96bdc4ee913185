"""Integration tests for persistence layer."""
