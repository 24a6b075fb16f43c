# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Config command: view and edit ~/.hamcayley/config.yaml."""

import click
from rich.console import Console
from rich.table import Table

from ..config import (
    CONFIG_FILE,
    VALID_KEYS,
    get_corpus_path,
    get_search_timeout,
    get_workers,
    read_config,
    write_config,
)

console = Console()


def _validate(key: str, value: str) -> str | float | int:
    if key == "search_timeout":
        number = float(value)
        if number < 0:
            raise ValueError("must be non-negative")
        return number
    if key == "workers":
        number = int(value)
        if number < 0:
            raise ValueError("must be non-negative")
        return number
    return value


@click.group("config", invoke_without_command=True)
@click.pass_context
def config_group(ctx):
    """View or edit local configuration.

    Environment variables (HAMCAYLEY_SEARCH_TIMEOUT, HAMCAYLEY_WORKERS,
    HAMCAYLEY_CORPUS) override the file; command-line flags override both.

    \b
    Examples:
      hamcayley config                          # Effective settings
      hamcayley config set search-timeout 300   # Longer search budget
      hamcayley config set workers 4            # Parallel search
      hamcayley config get corpus
    """
    if ctx.invoked_subcommand is not None:
        return

    table = Table(title="Configuration", show_header=False)
    table.add_column("Key", style="bold")
    table.add_column("Value")
    table.add_row("search-timeout", f"{get_search_timeout():g}s")
    table.add_row("workers", str(get_workers()))
    table.add_row("corpus", str(get_corpus_path()))
    table.add_row("Config file", str(CONFIG_FILE) if CONFIG_FILE.exists() else f"{CONFIG_FILE} [dim](absent)[/dim]")
    console.print(table)


@config_group.command("set")
@click.argument("key")
@click.argument("value")
def config_set(key, value):
    """Set a configuration value.

    \b
    Keys:
      search-timeout   Search budget in seconds (0 disables the limit)
      workers          Search fan-out; 0 is single-threaded and deterministic
      corpus           Default certificate corpus for 'hamcayley verify'
    """
    key = key.lower().replace("-", "_")

    if key not in [k.replace("-", "_") for k in VALID_KEYS]:
        console.print(f"[red]Unknown key: {key}[/red]")
        console.print(f"Valid keys: {', '.join(VALID_KEYS)}")
        raise SystemExit(1)

    try:
        parsed = _validate(key, value)
    except ValueError as e:
        console.print(f"[red]Invalid value for {key}:[/red] {value} ({e})")
        raise SystemExit(1)

    config = read_config()
    config[key] = parsed
    write_config(config)
    console.print(f"[green]{key.replace('_', '-')} set to:[/green] {parsed}")


@config_group.command("get")
@click.argument("key")
def config_get(key):
    """Get a configuration value from the config file."""
    key = key.lower().replace("-", "_")
    value = read_config().get(key)

    if value is not None and value != "":
        console.print(str(value))
    else:
        console.print(f"[yellow]{key.replace('_', '-')} not set[/yellow]")
        raise SystemExit(1)
