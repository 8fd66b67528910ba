"""Serialization and rendering of command results."""

from .records import ResultRecord, jsonable, parse_csv, to_csv, to_jsonl
from .render import render_diagram, print_result, tableau_panel

__all__ = [
    "ResultRecord",
    "jsonable",
    "parse_csv",
    "to_csv",
    "to_jsonl",
    "render_diagram",
    "print_result",
    "tableau_panel",
]
