# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""hamcayley CLI - finite groups, Cayley graphs and certified hamiltonian cycles."""

from importlib.metadata import version as _v

try:
    __version__ = _v("hamcayley")
except Exception:
    __version__ = "dev"
