# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""hamcayley configuration.

Precedence for every setting: explicit argument > environment > config file > default.
"""

import os
from pathlib import Path

import yaml

# Local settings storage
CONFIG_DIR = Path.home() / ".hamcayley"
CONFIG_FILE = CONFIG_DIR / "config.yaml"

# Largest group the engine will tabulate
MAX_ORDER = 512

# Search budget (seconds) and worker fan-out; 0 workers = single-threaded, deterministic
DEFAULT_SEARCH_TIMEOUT = 120.0
DEFAULT_WORKERS = 0

# Shipped corpus, relative to the repository root
DEFAULT_CORPUS = Path(__file__).resolve().parent.parent / "corpus" / "paper-cycles.jsonl"

# Catalog manifest shipped as package data
CATALOG_FILE = Path(__file__).resolve().parent / "templates" / "catalog.yaml"

VALID_KEYS = ["search-timeout", "workers", "corpus"]


def read_config() -> dict:
    """Load ~/.hamcayley/config.yaml, or an empty mapping."""
    if not CONFIG_FILE.exists():
        return {}
    return yaml.safe_load(CONFIG_FILE.read_text()) or {}


def write_config(config: dict) -> None:
    CONFIG_DIR.mkdir(parents=True, exist_ok=True)
    CONFIG_FILE.write_text(yaml.safe_dump(config, default_flow_style=False))


def _setting(env_var: str, key: str):
    value = os.environ.get(env_var)
    if value is not None:
        return value
    return read_config().get(key.replace("-", "_"))


def get_search_timeout() -> float:
    """Get the search time budget from environment, config file or default."""
    value = _setting("HAMCAYLEY_SEARCH_TIMEOUT", "search-timeout")
    return float(value) if value is not None else DEFAULT_SEARCH_TIMEOUT


def get_workers() -> int:
    """Get the search worker count from environment, config file or default."""
    value = _setting("HAMCAYLEY_WORKERS", "workers")
    return int(value) if value is not None else DEFAULT_WORKERS


def get_corpus_path() -> Path:
    """Get the certificate corpus path from environment, config file or default."""
    value = _setting("HAMCAYLEY_CORPUS", "corpus")
    return Path(value).expanduser() if value else DEFAULT_CORPUS
