# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""CLI command modules."""

from . import certify, completion, config_cmd, gensets, groups, search, verify

__all__ = [
    "groups",
    "gensets",
    "verify",
    "certify",
    "search",
    "config_cmd",
    "completion",
]
