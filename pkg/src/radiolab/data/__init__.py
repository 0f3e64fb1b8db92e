"""Bundled edge lists and benchmark sequences for the cage graphs."""
