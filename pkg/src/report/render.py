"""Text diagrams and rich tables for ``--format text``."""

from typing import Dict, List, Optional, Sequence

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ..tableaux import Partition, TableauPair

BOTH = "#"
LAMBDA_ONLY = "o"
MU_ONLY = "x"


def render_diagram(lam: Partition, overlay: Optional[Partition] = None) -> str:
    """
    Young diagram in English notation.

    With an overlay, ``#`` marks cells in both diagrams, ``o`` cells only in
    ``lam`` and ``x`` cells only in ``overlay``.
    """
    if overlay is None:
        return "\n".join(BOTH * part for part in lam)
    rows = max(len(lam), len(overlay))
    lines = []
    for i in range(rows):
        a, b = lam[i], overlay[i]
        common = min(a, b)
        extra = LAMBDA_ONLY if a > b else MU_ONLY
        lines.append(BOTH * common + extra * abs(a - b))
    return "\n".join(lines)


def _tableau_text(rows: Sequence[Sequence[int]]) -> str:
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in rows)


def tableau_panel(pair: TableauPair) -> Panel:
    table = Table(show_header=True, box=box.SIMPLE, padding=(0, 2))
    table.add_column("P (insertion)", style="cyan")
    table.add_column("Q (recording)", style="magenta")
    table.add_row(_tableau_text(pair.p.to_list()), _tableau_text(pair.q.to_list()))
    return Panel(table, title=f"[bold]RSK[/] shape {pair.shape}", border_style="blue")


def blocks_table(blocks: List[Dict]) -> Table:
    table = Table(box=box.SIMPLE, padding=(0, 1))
    table.add_column("#", justify="right", style="dim")
    table.add_column("Kind", justify="center")
    table.add_column("Rows", justify="center")
    table.add_column("Area", justify="right")
    table.add_column("Box", justify="right")
    for idx, block in enumerate(blocks, start=1):
        color = "green" if block["kind"] == "lambda" else "yellow"
        rows = block["rows"]
        table.add_row(
            str(idx),
            f"[{color}]{block['kind']}[/]",
            f"{rows[0]}-{rows[1]}",
            str(block["area"]),
            f"{block['box'][0]}x{block['box'][1]}",
        )
    return table


def checks_table(checks: List[Dict]) -> Table:
    table = Table(box=box.SIMPLE, padding=(0, 1))
    table.add_column("Check", style="cyan")
    table.add_column("Result", justify="center")
    for check in checks:
        verdict = "[green]PASS[/]" if check["passed"] else "[red bold]FAIL[/]"
        table.add_row(check["name"], verdict)
    return table


def mapping_table(payload: Dict) -> Table:
    """Key/value table for everything without a dedicated view."""
    table = Table(show_header=False, box=None, padding=(0, 1))
    table.add_column("Key", style="dim")
    table.add_column("Value")
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (dict, list)) and len(str(value)) > 80:
            value = f"{type(value).__name__} ({len(value)} items)"
        table.add_row(key, str(value))
    return table


def print_result(console: Console, command: str, outputs: Dict, extra=None) -> None:
    """Render a command's outputs for humans."""
    header = Text()
    header.append("RSK LAB", style="bold cyan")
    header.append(" │ ", style="dim")
    header.append(command, style="green")
    console.print(Panel(header, box=box.MINIMAL))
    if extra is not None:
        console.print(extra)
    if "checks" in outputs:
        console.print(checks_table(outputs["checks"]))
    elif "blocks" in outputs and isinstance(outputs["blocks"], list):
        console.print(blocks_table(outputs["blocks"]))
    else:
        console.print(mapping_table(outputs))
