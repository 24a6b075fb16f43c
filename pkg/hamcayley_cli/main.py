# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""hamcayley CLI entry point."""

import logging

import click
from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .commands import certify, completion, config_cmd, gensets, groups, search, verify
from .commands._output import EXIT_FAILURE, EXIT_USAGE

console = Console()


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    root = logging.getLogger("hamcayley")
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False


@click.group()
@click.version_option(version=__version__, prog_name="hamcayley")
@click.option("--verbose", "-v", count=True, help="-v for routing decisions, -vv for search progress")
@click.pass_context
def cli(ctx, verbose: int):
    """hamcayley - finite groups, Cayley graphs and verified hamiltonian cycles.

    \b
    Examples:
      hamcayley groups --order 48                     # Catalog groups of order 48
      hamcayley gensets --group 48.S4xZ2              # Minimal generating sets up to Aut
      hamcayley verify                                # Replay the shipped corpus
      hamcayley verify --filter 'A2.*' --json         # One section, machine-readable
      hamcayley certify --group 80.Z5xZ2^4 --genset x,v
      hamcayley search --group 16.dihedral --genset t,f --require-edge f
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    _configure_logging(verbose)


cli.add_command(groups.groups_command)
cli.add_command(gensets.gensets_command)
cli.add_command(verify.verify_command)
cli.add_command(certify.certify_command)
cli.add_command(search.search_command)
cli.add_command(config_cmd.config_group)
cli.add_command(completion.completion_command)


def main():
    """Entrypoint mapping click usage errors to exit code 2."""
    try:
        cli(standalone_mode=False)
    except SystemExit as e:
        raise SystemExit(e.code)
    except click.exceptions.UsageError as e:
        e.show()
        raise SystemExit(EXIT_USAGE)
    except click.ClickException as e:
        e.show()
        raise SystemExit(e.exit_code)
    except click.Abort:
        raise SystemExit(EXIT_FAILURE)


if __name__ == "__main__":
    main()
