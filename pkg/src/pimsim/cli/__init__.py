"""Command-line interface for pimsim."""
