# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Gensets command: minimal generating sets of a group, up to automorphisms."""

import click
from rich.console import Console
from rich.table import Table

from ..config import get_workers
from ..engine import resolve_group
from ..engine.callbacks import SearchCallbacks
from ..engine.gensets import DEFAULT_MAX_SIZE, genset_report
from ..engine.schemas import GensetReport
from ..exceptions import HamCayleyError
from ._output import echo_json_lines, fail

console = Console()


@click.command("gensets")
@click.option("--group", "-g", "group_key", required=True, help="Catalog key or inline JSON spec")
@click.option("--max-size", type=int, default=DEFAULT_MAX_SIZE, show_default=True,
              help="Largest generating set to enumerate")
@click.option("--list", "show_list", is_flag=True, help="Print one representative per orbit")
@click.option("--workers", type=int, default=None, help="Enumeration fan-out (default: config)")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
def gensets_command(group_key: str, max_size: int, show_list: bool, workers: int | None, as_json: bool):
    """Count minimal generating sets and their orbits under Aut(G).

    When the catalog records generating sets for the group, each is located
    among the computed orbits, so a hand-made case list can be checked for
    completeness and for duplicates.

    \b
    Examples:
      hamcayley gensets --group 48.S4xZ2            # 4/39/10 orbits of sizes 2/3/4
      hamcayley gensets --group 48.GL2(3) --list    # Show the representatives
      hamcayley gensets --group 16.dihedral --json
    """
    callbacks = SearchCallbacks(max_workers=workers if workers is not None else get_workers())
    try:
        G = resolve_group(group_key)
        with console.status(f"Enumerating generating sets of {G.name}..."):
            report = genset_report(G, max_size, key=group_key, callbacks=callbacks)
    except HamCayleyError as e:
        fail(e)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--max-size")

    if as_json:
        echo_json_lines([report])
        return

    _display(report, show_list)


def _display(report: GensetReport, show_list: bool) -> None:
    table = Table(title=f"{report.group} (order {report.order}, |Aut| = {report.aut_order})")
    table.add_column("Size", justify="right")
    table.add_column("Sets", justify="right")
    table.add_column("Orbits", justify="right", style="bold")
    table.add_column("Orbits (with inversion)", justify="right")
    for size, count in report.counts.items():
        table.add_row(
            str(size),
            str(count),
            str(report.orbits.get(size, 0)),
            str(report.orbits_with_inversion.get(size, 0)),
        )
    console.print(table)
    console.print(f"[dim]{report.total_orbits} orbit(s) of minimal generating sets[/dim]")

    if show_list:
        console.print()
        for i, names in enumerate(report.representatives):
            console.print(f"  {i:>3}  {{{', '.join(names)}}}")

    if report.listed is not None:
        console.print()
        listed = Table(title="Recorded generating sets")
        listed.add_column("Set")
        listed.add_column("Minimal")
        listed.add_column("Orbit", justify="right")
        listed.add_column("Orbit (with inversion)", justify="right")
        for m in report.listed:
            listed.add_row(
                "{" + ", ".join(m.words) + "}",
                "[green]yes[/green]" if m.minimal else "[red]no[/red]",
                "-" if m.orbit is None else str(m.orbit),
                "-" if m.orbit_with_inversion is None else str(m.orbit_with_inversion),
            )
        console.print(listed)
        if report.listed_distinct:
            console.print("[green]Each recorded set lies in its own orbit.[/green]")
        else:
            console.print("[yellow]Some recorded sets share an orbit or fall outside them.[/yellow]")
