# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Groups command: list the catalog."""

import click
from rich.console import Console
from rich.table import Table

from ..engine.catalog import list_groups
from ..exceptions import HamCayleyError
from ._output import echo_json_lines, fail

console = Console()


@click.command("groups")
@click.option("--order", "-n", type=int, default=None, help="Only groups of this order")
@click.option("--json", "as_json", is_flag=True, help="Output as line-delimited JSON")
def groups_command(order: int | None, as_json: bool):
    """List catalog groups with their center, derived subgroup and Sylow normality.

    For an order 16p with p an odd prime, every isomorphism type of that
    order is enumerated rather than only the named constructions.

    \b
    Examples:
      hamcayley groups                  # Everything in the manifest
      hamcayley groups --order 16       # The 14 groups of order 16
      hamcayley groups --order 48       # All 52 types of order 48
      hamcayley groups --json           # One JSON object per group
    """
    try:
        with console.status("Building groups..."):
            summaries = list_groups(order)
    except HamCayleyError as e:
        fail(e)

    if as_json:
        echo_json_lines(summaries)
        return

    if not summaries:
        console.print(f"[yellow]No catalog groups of order {order}.[/yellow]")
        return

    table = Table(title=f"Groups of order {order}" if order else "Catalog")
    table.add_column("Key", style="bold")
    table.add_column("Order", justify="right")
    table.add_column("|Z(G)|", justify="right")
    table.add_column("|G'|", justify="right")
    table.add_column("Normal Sylow")
    table.add_column("Family", style="dim")
    for s in summaries:
        sylow = " ".join(
            f"[green]{p}[/green]" if normal else f"[red]{p}[/red]" for p, normal in s.normal_sylow.items()
        )
        key = s.key if not s.parameters else f"{s.key} {_params(s.parameters)}"
        table.add_row(key, str(s.order), str(s.center), str(s.derived), sylow, s.family)
    console.print(table)
    console.print(f"[dim]{len(summaries)} group(s)[/dim]")


def _params(parameters: dict[str, int]) -> str:
    return ",".join(f"{k}={v}" for k, v in parameters.items())
