# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Verify command: replay a certificate corpus."""

import click
from rich.console import Console
from rich.table import Table

from ..config import get_corpus_path, get_workers
from ..engine.callbacks import SearchCallbacks
from ..engine.certificates import corpus_verify, parse_bindings
from ..engine.schemas import CertificateReport, CorpusReport, Status
from ..exceptions import HamCayleyError
from ._output import EXIT_FAILURE, echo_json_lines, fail

console = Console()

STATUS_STYLES = {
    Status.Passed: "[green]passed[/green]",
    Status.Failed: "[red bold]failed[/red bold]",
    Status.Error: "[red]error[/red]",
}


@click.command("verify")
@click.option("--cert", "cert_path", type=click.Path(dir_okay=False), default=None,
              help="Corpus file (default: the shipped corpus or HAMCAYLEY_CORPUS)")
@click.option("--filter", "pattern", default=None, help="Only certificate ids matching this glob")
@click.option("--params", default=None, help="Pin parameters, e.g. p=5,k=2")
@click.option("--show-vertices", is_flag=True, help="Print the vertices each cycle visits")
@click.option("--workers", type=int, default=None, help="Certificates checked in parallel")
@click.option("--json", "as_json", is_flag=True, help="One JSON report per line")
def verify_command(cert_path: str | None, pattern: str | None, params: str | None,
                   show_vertices: bool, workers: int | None, as_json: bool):
    """Replay every certificate over its admissible parameter grid.

    Exits 0 when every run passes, 1 on any failure, 2 on a malformed corpus.

    \b
    Examples:
      hamcayley verify                              # The shipped corpus
      hamcayley verify --filter '3.3.*'             # One section
      hamcayley verify --filter 6.2.a --params p=13,k=5
      hamcayley verify --filter 3.2.1 --show-vertices
      hamcayley verify --json > report.jsonl
    """
    path = cert_path or get_corpus_path()
    callbacks = SearchCallbacks(max_workers=workers if workers is not None else get_workers())
    try:
        fixed = parse_bindings(params)
        with console.status("Replaying certificates..."):
            report = corpus_verify(path, pattern, fixed, callbacks, show_vertices)
    except HamCayleyError as e:
        fail(e)

    if as_json:
        echo_json_lines(report.reports)
    else:
        _display(report, show_vertices)

    if not report.ok:
        raise SystemExit(EXIT_FAILURE)


def _binding(r: CertificateReport) -> str:
    return ",".join(f"{k}={v}" for k, v in r.binding.items())


def _display(report: CorpusReport, show_vertices: bool) -> None:
    if report.total == 0:
        console.print("[yellow]No certificates matched.[/yellow]")
        return

    table = Table(title="Certificates")
    table.add_column("Id", style="bold")
    table.add_column("Binding")
    table.add_column("Group")
    table.add_column("Strategy", style="dim")
    table.add_column("Status")
    table.add_column("Detail")
    for r in report.reports:
        detail = r.error or ", ".join(ch.name for ch in r.checks if not ch.passed)
        if r.alternative is not None and r.passed:
            detail = f"alternative {r.alternative}"
        if r.degenerate:
            detail = (detail + " (degenerate)").strip()
        table.add_row(r.id, _binding(r), r.group, r.strategy.value, STATUS_STYLES[r.status], detail)
    console.print(table)

    for r in report.reports:
        if not r.passed and r.checks:
            console.print(f"\n[bold]{r.id}[/bold] {_binding(r)}")
            for ch in r.checks:
                mark = "[green]✓[/green]" if ch.passed else "[red]✗[/red]"
                console.print(f"  {mark} {ch.name} [dim]{ch.detail}[/dim]")
        if show_vertices and r.vertices:
            console.print(f"\n[bold]{r.id}[/bold] {_binding(r)} [dim]vertices:[/dim]")
            console.print("  " + ", ".join(r.vertices))

    style = "green" if report.ok else "red"
    console.print(
        f"\n[{style}]{report.passed}/{report.total} passed[/{style}]"
        + (f", [red]{report.failed} failed[/red]" if report.failed else "")
    )
