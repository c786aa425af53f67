"""Shared exception types."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A configurable work cap was exceeded; the message names the cap."""


class PrecisionExhaustedError(RuntimeError):
    """Adaptive precision hit its ceiling without resolving the result."""
