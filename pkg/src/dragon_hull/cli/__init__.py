"""Command line interface (console script ``dragon-hull``)."""

from .main import build_parser, main

__all__ = ['build_parser', 'main']
