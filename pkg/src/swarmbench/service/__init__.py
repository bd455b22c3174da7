"""HTTP service exposing the benchmark registry and experiment harness."""

from .app import app

__all__ = ["app"]
