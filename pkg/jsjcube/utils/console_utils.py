from __future__ import annotations

import typing as t

from rich.console import Console
from rich.table import Table

from jsjcube.complex.models import TubularComplex, format_word
from jsjcube.opening.decomposition import DecompositionGraph

err_console = Console(stderr=True)

_STATUS = {
    "INFO": "blue",
    "SUCCESS": "green",
    "WARNING": "yellow",
    "ERROR": "red",
}


def print_status(message: str, status: str = "INFO"):
    color = _STATUS.get(status, "blue")
    err_console.print(f"[{color}][{status}][/{color}] {message}")


def print_section(title: str):
    err_console.rule(f"[bold blue]{title}[/bold blue]")


def complex_summary(X: TubularComplex) -> Table:
    table = Table(title="tubular complex")
    table.add_column("vertex graph")
    table.add_column("V", justify="right")
    table.add_column("E", justify="right")
    table.add_column("tubes", justify="right")
    for name in sorted(X.vertex_graphs):
        g = X.vertex_graphs[name]
        table.add_row(name, str(len(g.vertices)), str(len(g.edges)), str(len(X.incident_words(name))))
    return table


def classification_table(records: t.Sequence, title: str = "cycles") -> Table:
    table = Table(title=title)
    table.add_column("graph")
    table.add_column("root")
    table.add_column("exp", justify="right")
    table.add_column("K", justify="right")
    table.add_column("strongly sep.")
    table.add_column("stabiliser")
    table.add_column("no crossing")
    table.add_column("splitting", style="bold")
    for r in records:
        table.add_row(
            r.graph,
            format_word(r.root),
            str(r.exponent),
            str(r.K),
            _tick(r.strongly_separating),
            _tick(r.stabiliser_condition),
            _tick(r.no_self_crossing),
            _tick(r.splitting),
        )
    return table


def decomposition_table(dg: DecompositionGraph) -> Table:
    table = Table(title="JSJ decomposition")
    table.add_column("vertex")
    table.add_column("kind")
    table.add_column("rank", justify="right")
    table.add_column("valence", justify="right")
    table.add_column("origin")
    for v in dg.canonical().vertices:
        kind = f"{v.kind} (peripheral)" if v.peripheral else str(v.kind)
        table.add_row(v.id, kind, str(v.rank), str(dg.degree(v.id)), ", ".join(v.origin))
    return table


def _tick(flag: bool) -> str:
    return "[green]yes[/green]" if flag else "[red]no[/red]"
