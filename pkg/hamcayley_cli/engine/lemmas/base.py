# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""LiftingLemma ABC and the outcome every lemma returns.

A lemma checks its hypotheses, builds the cycle its proof prescribes and
verifies it on Cay(G;S) before reporting ``applied=True``. Constructions that
are only known to exist are discharged by exhaustive search, and the witness
then records ``search-backed``.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from ...exceptions import HamCayleyError
from ..callbacks import SearchCallbacks
from ..cayley import CayleyGraph, build_cayley, verify_ham_cycle
from ..group import Element, GroupTable, Label
from ..search import SearchConstraint, SearchMode, search_ham
from ..walk import parse_walk, render_labels

logger = logging.getLogger("hamcayley.engine.lemmas")

SEARCH_BACKED = "search-backed"


@dataclass
class LemmaOutcome:
    """What a lemma produced: a verified cycle in G, or the reason it did not apply."""

    strategy: str
    applied: bool
    cycle: list[Label] | None = None
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str | None = None

    @classmethod
    def fail(cls, strategy: str, reason: str, **witness: Any) -> LemmaOutcome:
        return cls(strategy, False, None, dict(witness), reason)

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "applied": self.applied,
            "cycle": render_labels(self.cycle) if self.cycle is not None else None,
            "length": len(self.cycle) if self.cycle is not None else None,
            "witness": self.witness,
            "reason": self.reason,
        }


class LiftingLemma(ABC):
    """Router-facing interface: try every admissible choice of the lemma's parameters."""

    tag: str = ""

    @staticmethod
    @abstractmethod
    def attempt(
        G: GroupTable, S: Mapping[str, Element], callbacks: SearchCallbacks | None = None
    ) -> LemmaOutcome:
        """Return the first applied outcome, or a not-applied outcome with the last reason."""


# ── Helpers ───────────────────────────────────────────────────────────────


def as_label(value: Label | str) -> Label:
    """``"x"``, ``"x^-1"`` or ``"y^2w"`` as a single label."""
    if isinstance(value, Label):
        return value
    labels = parse_walk(value)
    if len(labels) != 1:
        raise HamCayleyError(f"'{value}' is not a single label")
    return labels[0]


def cayley_of(G: GroupTable, S: Mapping[str, Element] | CayleyGraph) -> CayleyGraph:
    return S if isinstance(S, CayleyGraph) else build_cayley(G, S)


def canonical(g: CayleyGraph, label: Label) -> Label:
    """The label of ``g.labels`` denoting the same step; involutions have only the positive one."""
    if label in g.labels:
        return label
    if label.inverse() in g.labels and g.element(label) == g.element(label.inverse()):
        return label.inverse()
    return label


def finish(
    strategy: str, g: CayleyGraph, cycle: Sequence[Label], witness: dict[str, Any]
) -> LemmaOutcome:
    """Verify a constructed cycle; a failure is reported, never trusted."""
    check = verify_ham_cycle(g, cycle)
    if not check:
        logger.warning(f"{strategy}: constructed walk failed verification ({check.reason})")
        return LemmaOutcome.fail(strategy, f"construction-failed: {check.reason}", **witness)
    if check.degenerate:
        witness = {**witness, "degenerate": True}
    return LemmaOutcome(strategy, True, list(cycle), witness)


def search_backed(
    strategy: str,
    g: CayleyGraph,
    witness: dict[str, Any],
    constraint: SearchConstraint | None = None,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    """Discharge an existence statement by exhaustive search on the whole graph."""
    cycle = search_ham(g, constraint or SearchConstraint(mode=SearchMode.Cycle), callbacks)
    if cycle is None:
        return LemmaOutcome.fail(strategy, "no-hamiltonian-cycle", **witness)
    return finish(strategy, g, cycle, {**witness, "route": SEARCH_BACKED})


def name_of(G: GroupTable, g: Element) -> str:
    return G.element_name(g)
