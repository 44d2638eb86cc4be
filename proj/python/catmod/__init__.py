"""Finite-model workbench: categories of models, ultraproducts, homotopic logic.

Structured inputs and outputs are JSON strings in the same formats the
``catmod`` CLI uses; see the project README for the schemas.
"""

from catmod._core import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
