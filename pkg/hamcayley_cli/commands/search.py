# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Search command: exact hamiltonian cycle (or path) search in one Cayley graph."""

import json
import time

import click
from rich.console import Console

from ..config import get_search_timeout, get_workers
from ..engine import resolve_group
from ..engine.callbacks import SearchCallbacks
from ..engine.cayley import build_cayley, verify_ham_cycle, verify_ham_path
from ..engine.gensets import parse_genset, split_words
from ..engine.search import SearchConstraint, SearchMode, search_directed_ham, search_ham
from ..engine.walk import parse_walk, render_labels
from ..exceptions import HamCayleyError, WalkSyntaxError
from ._output import EXIT_FAILURE, fail

console = Console()


@click.command("search")
@click.option("--group", "-g", "group_key", required=True, help="Catalog key or inline JSON spec")
@click.option("--genset", "-s", required=True, help="Comma-separated words")
@click.option("--require-edge", default=None, help="Label the cycle must start with, e.g. 'x^-1'")
@click.option("--forbid", default=None, help="Comma-separated labels to leave out")
@click.option("--path", "as_path", is_flag=True, help="Search for a hamiltonian path instead")
@click.option("--directed", is_flag=True, help="Only use arcs v -> vs")
@click.option("--seed", type=int, default=0, help="Rotate the label order")
@click.option("--timeout", type=float, default=None, help="Seconds; 0 disables (default: config)")
@click.option("--workers", type=int, default=None, help="Fan-out over first moves (default: config)")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
def search_command(group_key: str, genset: str, require_edge: str | None, forbid: str | None,
                   as_path: bool, directed: bool, seed: int, timeout: float | None,
                   workers: int | None, as_json: bool):
    """Backtracking search with connectivity pruning.

    A search that runs out of time exits 3; that says nothing about existence.

    \b
    Examples:
      hamcayley search --group 16.dihedral --genset t,f
      hamcayley search --group 48.S4xZ2 --genset '(3,4), (1,2,3)(5,6)' --require-edge b
      hamcayley search --group 16.Z4:Z4 --genset x,y --directed --timeout 10
    """
    try:
        G = resolve_group(group_key)
        S = parse_genset(G, genset)
        g = build_cayley(G, S)
        required = None
        if require_edge:
            labels = parse_walk(require_edge)
            if len(labels) != 1:
                raise WalkSyntaxError(f"'{require_edge}' is not a single label", 0, require_edge)
            required = (0, labels[0])
        constraint = SearchConstraint(
            required_edge=required,
            forbidden_labels=frozenset(split_words(forbid)) if forbid else frozenset(),
            mode=SearchMode.Path if as_path else SearchMode.Cycle,
            seed=seed,
            timeout=timeout if timeout is not None else get_search_timeout(),
        )
        callbacks = SearchCallbacks(max_workers=workers if workers is not None else get_workers())
        started = time.monotonic()
        with console.status(f"Searching {g!r}..."):
            if directed:
                found = search_directed_ham(g, constraint, callbacks)
            else:
                found = search_ham(g, constraint, callbacks)
        elapsed = time.monotonic() - started
    except HamCayleyError as e:
        fail(e)

    check = None
    if found is not None:
        check = verify_ham_path(g, found) if as_path else verify_ham_cycle(g, found)

    if as_json:
        click.echo(json.dumps({
            "group": G.name,
            "genset": list(S),
            "mode": constraint.mode.value,
            "found": found is not None,
            "cycle": render_labels(found) if found is not None else None,
            "length": len(found) if found is not None else None,
            "verified": bool(check) if check is not None else None,
            "elapsed": round(elapsed, 3),
        }))
    elif found is None:
        console.print(f"[yellow]No hamiltonian {constraint.mode.value} in {g!r}.[/yellow]")
    else:
        console.print(f"[bold]{render_labels(found)}[/bold]")
        status = "[green]verified[/green]" if check else f"[red]not verified: {check.reason}[/red]"
        console.print(f"[dim]{len(found)} steps, {elapsed:.2f}s,[/dim] {status}")

    if found is None or not check:
        raise SystemExit(EXIT_FAILURE)
