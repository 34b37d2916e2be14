"""Keeps tests importable as top-level modules (oracles, helpers)."""
