"""Formal contexts, conceptual scaling, and scaling dimensions."""

from ._scaledim import *  # noqa: F401,F403
