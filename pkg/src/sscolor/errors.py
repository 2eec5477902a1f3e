"""Shared exception types.

Everything user-facing funnels through these two classes so the CLI can
map them onto exit codes without inspecting message text.
"""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-range input (files, labels, arguments)."""


class UnsupportedError(Exception):
    """Request is well-formed but outside the supported size limits."""
