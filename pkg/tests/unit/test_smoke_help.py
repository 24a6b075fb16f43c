"""
Smoke tests for command registration, help text and the entry point's exit codes.
"""

import click
import pytest
from click.testing import CliRunner

from hamcayley_cli import __version__
from hamcayley_cli.main import cli, main

runner = CliRunner()

DATA_COMMANDS = ["groups", "gensets", "verify", "certify", "search"]


def _walk(group: click.Group, prefix: tuple[str, ...] = ()):
    for name, cmd in sorted(group.commands.items()):
        yield (*prefix, name)
        if isinstance(cmd, click.Group):
            yield from _walk(cmd, (*prefix, name))


COMMAND_PATHS = [" ".join(p) for p in _walk(cli)]


def test_registry():
    assert set(COMMAND_PATHS) == {
        "certify", "completion", "config", "config get", "config set",
        "gensets", "groups", "search", "verify",
    }


@pytest.mark.parametrize("path", COMMAND_PATHS)
def test_help(path):
    result = runner.invoke(cli, [*path.split(), "--help"])
    assert result.exit_code == 0, result.output
    assert result.output.strip()


@pytest.mark.parametrize("name", DATA_COMMANDS)
def test_data_commands_offer_json(name):
    result = runner.invoke(cli, [name, "--help"])
    assert "--json" in result.output


def test_version():
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_entry_point_maps_usage_errors_to_two(monkeypatch):
    monkeypatch.setattr("sys.argv", ["hamcayley", "search", "--group", "8.D8"])
    with pytest.raises(SystemExit) as exc:
        main()
    assert exc.value.code == 2


def test_entry_point_unknown_command(monkeypatch):
    monkeypatch.setattr("sys.argv", ["hamcayley", "frobnicate"])
    with pytest.raises(SystemExit) as exc:
        main()
    assert exc.value.code == 2
