"""
Shared fixtures and helpers for unit tests.

Everything runs in-process: groups are built from the shipped catalog, and
CLI tests go through click's CliRunner.

Conventions:

- Catalog groups are cached by `build`, so fixtures can hand out the same
  table to every test without rebuilding it.

- Tests that touch the config file monkeypatch `CONFIG_DIR` / `CONFIG_FILE`
  through the `isolated_config` fixture; never write to the real home.

- Tests that replay the full corpus or enumerate a whole order 16p carry the
  `slow` marker and are skipped by default (`pytest -m slow` runs them).
"""

import json

import pytest
from click.testing import CliRunner

from hamcayley_cli.engine.catalog import build
from hamcayley_cli.engine.cayley import build_cayley
from hamcayley_cli.engine.gensets import parse_genset

# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def dihedral8():
    """D8 = <f, t | f^2 = t^4 = (ft)^2 = e>."""
    return build("8.D8")


@pytest.fixture
def dihedral16():
    return build("16.dihedral")


@pytest.fixture
def quaternion8():
    return build("8.Q8")


@pytest.fixture
def s4():
    """S4 on {1,2,3,4} with a = (1,2), b = (1,2,3,4)."""
    return build("24.S4")


@pytest.fixture
def s4z2():
    return build("48.S4xZ2")


@pytest.fixture
def isolated_config(tmp_path, monkeypatch):
    """Point the config layer at a temporary directory and clear env overrides."""
    import hamcayley_cli.config as config

    monkeypatch.setattr(config, "CONFIG_DIR", tmp_path)
    monkeypatch.setattr(config, "CONFIG_FILE", tmp_path / "config.yaml")
    for var in ("HAMCAYLEY_SEARCH_TIMEOUT", "HAMCAYLEY_WORKERS", "HAMCAYLEY_CORPUS"):
        monkeypatch.delenv(var, raising=False)
    return tmp_path


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def cayley(G, words):
    """Cayley graph of G on a comma-separated generating set."""
    return build_cayley(G, parse_genset(G, words))


def write_corpus(path, records):
    """Write certificate records (dicts or raw strings) as a JSONL corpus."""
    lines = [r if isinstance(r, str) else json.dumps(r) for r in records]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def assert_exit_ok(result):
    assert result.exit_code == 0, (
        f"Expected exit 0, got {result.exit_code}.\nOutput:\n{result.output[:500]}"
    )


def assert_exit_error(result, code=1):
    assert result.exit_code == code, (
        f"Expected exit {code}, got {result.exit_code}.\nOutput:\n{result.output[:500]}"
    )


def assert_valid_json(result):
    """Assert output is a single JSON document, return parsed data."""
    assert_exit_ok(result)
    output = result.output.strip()
    assert len(output) > 0, "No output"
    try:
        return json.loads(output)
    except json.JSONDecodeError as e:
        pytest.fail(f"Invalid JSON: {e}\nOutput:\n{output[:500]}")


def json_lines(result):
    """Parse one JSON document per non-blank output line."""
    out = []
    for line in result.output.splitlines():
        if not line.strip():
            continue
        try:
            out.append(json.loads(line))
        except json.JSONDecodeError as e:
            pytest.fail(f"Invalid JSON line: {e}\nLine:\n{line[:500]}")
    return out


def assert_no_ansi(result):
    """Assert no ANSI escape codes in output."""
    assert "\x1b[" not in result.output, "Output contains ANSI escape codes"
