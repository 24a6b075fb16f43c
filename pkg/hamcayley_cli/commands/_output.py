# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Shared output helpers: exit codes, error printing and line-delimited JSON."""

from collections.abc import Iterable

import click
from pydantic import BaseModel
from rich.console import Console

from ..exceptions import CorpusParseError, HamCayleyError, SearchTimeoutError, WalkSyntaxError

console = Console()

# Exit codes: 0 all pass, 1 failure, 2 usage or parse error, 3 search timeout
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


def exit_code_for(error: HamCayleyError) -> int:
    if isinstance(error, SearchTimeoutError):
        return EXIT_TIMEOUT
    if isinstance(error, (WalkSyntaxError, CorpusParseError)):
        return EXIT_USAGE
    return EXIT_FAILURE


def fail(error: HamCayleyError) -> None:
    """Print a domain error and exit with its code."""
    console.print(f"[red]Error:[/red] {error}")
    raise SystemExit(exit_code_for(error))


def echo_json_lines(models: Iterable[BaseModel]) -> None:
    """One JSON object per line on stdout, bypassing rich markup."""
    for model in models:
        click.echo(model.model_dump_json())
