# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Shell tab-completion scripts, rendered in-process by click."""

import os

import click
from click.shell_completion import get_completion_class

COMPLETE_VAR = "_HAMCAYLEY_COMPLETE"

PROFILES = {
    "bash": "~/.bashrc",
    "zsh": "~/.zshrc",
    "fish": "~/.config/fish/completions/hamcayley.fish",
}


def detect_shell() -> str | None:
    name = os.path.basename(os.environ.get("SHELL", ""))
    return name if name in PROFILES else None


@click.command("completion")
@click.argument("shell", required=False, type=click.Choice(sorted(PROFILES)))
@click.pass_context
def completion_command(ctx, shell: str | None):
    """Print the tab-completion script for your shell (default: $SHELL).

    \b
      eval "$(hamcayley completion)"
      hamcayley completion fish > ~/.config/fish/completions/hamcayley.fish
    """
    shell = shell or detect_shell()
    if shell is None:
        raise click.ClickException("Could not detect shell. Pass one of: bash, zsh, fish")

    complete = get_completion_class(shell)
    if complete is None:
        raise click.ClickException(f"click has no completion support for {shell}")
    root = ctx.find_root()
    script = complete(root.command, {}, "hamcayley", COMPLETE_VAR).source()
    if not script.strip():
        raise click.ClickException(f"Empty {shell} completion script")

    click.echo(script)
    redirect = ">" if shell == "fish" else ">>"
    click.echo(f"# Install: hamcayley completion {shell} {redirect} {PROFILES[shell]}", err=True)
