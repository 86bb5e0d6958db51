"""Exact counts for triangulations of convex polygons with few ears."""

import json

from ._core import *  # noqa: F401,F403
from ._core import DomainError, InputError, InvariantError, Triangulation, verify_json

__all__ = ["DomainError", "InputError", "InvariantError", "Triangulation", "verify"]


def verify(max_n=None, suites=(), threads=None):
    """Run the identity suites and return the report as a dict."""
    return json.loads(verify_json(max_n, list(suites), threads))
