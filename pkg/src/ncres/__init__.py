"""Minimal free right resolutions of graded modules over finitely
presented algebras, computed through a word-to-places encoding that turns
each syzygy step into a truncated commutative computation."""

from .freealg import AlgebraPresentation, ModulePresentation
from .resolver import (BettiTable, Resolution, ResolutionRequest,
                       betti_summary, render_betti_text, resolve)

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation",
    "ModulePresentation",
    "BettiTable",
    "Resolution",
    "ResolutionRequest",
    "betti_summary",
    "render_betti_text",
    "resolve",
    "__version__",
]
