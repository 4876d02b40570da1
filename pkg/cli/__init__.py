"""
Command-line delivery layer: argument parsing, command handlers, rendering.
"""

from cli.commands import COMMANDS, dispatch
from cli.output import render
from cli.parser import build_parser

__all__ = ["COMMANDS", "build_parser", "dispatch", "render"]
