# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Search callbacks: injected into long-running engine calls to decouple them from the CLI."""

from collections.abc import Callable
from dataclasses import dataclass


@dataclass
class SearchCallbacks:
    """Hooks for progress reporting and cancellation."""

    on_progress: Callable[[int, int], None] = lambda nodes, depth: None
    """Called periodically with the number of search nodes expanded and the current depth."""

    on_attempt: Callable[[str, bool, str], None] = lambda strategy, applied, reason: None
    """Called after each strategy the certifier tries: tag, applied flag, reason."""

    is_terminated: Callable[[], bool] = lambda: False
    """Checked periodically; returning True abandons the search as not found."""

    max_workers: int = 0
    """Search fan-out over first moves. 0 or 1 = single-threaded and deterministic."""
