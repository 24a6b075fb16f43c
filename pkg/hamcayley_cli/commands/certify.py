# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Certify command: find and verify a hamiltonian cycle for one Cayley graph."""

import click
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..config import get_search_timeout, get_workers
from ..engine import resolve_group
from ..engine.callbacks import SearchCallbacks
from ..engine.certify import certify_group
from ..engine.gensets import parse_genset
from ..engine.schemas import Attempt, CertifyReport
from ..exceptions import HamCayleyError, SearchTimeoutError
from ._output import EXIT_FAILURE, EXIT_TIMEOUT, echo_json_lines, fail

console = Console()


@click.command("certify")
@click.option("--group", "-g", "group_key", required=True, help="Catalog key or inline JSON spec")
@click.option("--genset", "-s", required=True, help="Comma-separated words, e.g. 'x, x^2 v'")
@click.option("--timeout", type=float, default=None, help="Search budget in seconds (default: config)")
@click.option("--workers", type=int, default=None, help="Search fan-out (default: config)")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
def certify_command(group_key: str, genset: str, timeout: float | None, workers: int | None, as_json: bool):
    """Route a generating set through the lifting lemmas, then fall back to search.

    The first strategy whose cycle verifies wins; every attempt is reported.

    \b
    Examples:
      hamcayley certify --group 80.Z5xZ2^4 --genset x,v
      hamcayley certify --group 48.S4xZ2 --genset '(3,4), (1,2,3), (5,6)'
      hamcayley certify --group 16.quaternion --genset 'x,y' --json
    """
    timeout = timeout if timeout is not None else get_search_timeout()
    trace: list[Attempt] = []
    callbacks = SearchCallbacks(
        on_attempt=lambda strategy, applied, reason: trace.append(
            Attempt(strategy=strategy, applied=applied, reason=reason or None)
        ),
        max_workers=workers if workers is not None else get_workers(),
    )
    try:
        G = resolve_group(group_key)
        S = parse_genset(G, genset)
        with console.status(f"Certifying {{{', '.join(S)}}} in {G.name}..."):
            report = certify_group(G, S, callbacks, timeout=timeout)
    except SearchTimeoutError as e:
        if as_json:
            echo_json_lines(e.trace or trace)
        else:
            _display_trace(e.trace or trace)
        console.print(f"[red]Error:[/red] {e}")
        raise SystemExit(EXIT_TIMEOUT)
    except HamCayleyError as e:
        fail(e)

    if as_json:
        echo_json_lines([report])
    else:
        _display(report)

    if not report.applied:
        raise SystemExit(EXIT_FAILURE)


def _display_trace(trace: list[Attempt]) -> None:
    table = Table(title="Strategies tried")
    table.add_column("#", justify="right", style="dim")
    table.add_column("Strategy", style="bold")
    table.add_column("Applied")
    table.add_column("Reason", style="dim")
    for i, a in enumerate(trace, 1):
        table.add_row(str(i), a.strategy, "[green]yes[/green]" if a.applied else "no", a.reason or "")
    console.print(table)


def _display(report: CertifyReport) -> None:
    _display_trace(report.trace)
    if not report.applied:
        console.print(f"[red]No hamiltonian cycle found for {{{', '.join(report.genset)}}}.[/red]")
        return
    body = f"[bold]{report.cycle}[/bold]\n\n[dim]length {report.length}, strategy {report.strategy}[/dim]"
    if report.witness:
        body += "\n" + "\n".join(f"[dim]{k}: {v}[/dim]" for k, v in report.witness.items())
    console.print(Panel(body, title=f"{report.group} {{{', '.join(report.genset)}}}", border_style="green"))
