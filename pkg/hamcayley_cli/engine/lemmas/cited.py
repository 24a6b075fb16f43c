# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Hypothesis checks for existence theorems whose constructions live elsewhere.

When one of them holds, the cycle it promises is produced by exhaustive
search and the outcome names the theorem that licensed it.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from itertools import product

import sympy

from ..callbacks import SearchCallbacks
from ..cayley import CayleyGraph
from ..group import Element, GroupTable, order_of
from ..subgroups import derived_subgroup, is_normal, normal_closure, subgroup_closure
from .base import LemmaOutcome, LiftingLemma, cayley_of, search_backed

logger = logging.getLogger("hamcayley.engine.lemmas.cited")


def _is_p_group_order(n: int) -> bool:
    return n == 1 or len(sympy.factorint(n)) == 1


def keating_witte(G: GroupTable) -> bool:
    """G′ is a cyclic p-group."""
    D = derived_subgroup(G)
    return _is_p_group_order(D.order) and D.is_cyclic()


def pk_subgroup(G: GroupTable, S: Mapping[str, Element]) -> bool:
    """Some choice of S or inverses has every st⁻¹ in a normal p-subgroup."""
    elements = list(S.values())
    for signs in product((1, -1), repeat=len(elements)):
        chosen = [s if e == 1 else G.inv[s] for s, e in zip(elements, signs)]
        diffs = [G.mul(s, G.inv[t]) for s in chosen for t in chosen]
        N = normal_closure(G, diffs)
        if _is_p_group_order(N.order):
            return True
    return False


def alspach_semidirect(G: GroupTable, S: Mapping[str, Element]) -> bool:
    """S = {s, t} with G = ⟨s⟩ ⋉ ⟨t⟩."""
    if len(S) != 2:
        return False
    a, b = S.values()
    for s, t in ((a, b), (b, a)):
        T = subgroup_closure(G, [t])
        if not is_normal(G, T):
            continue
        if order_of(G, s) * T.order != G.order:
            continue
        if all(G.power(s, i) not in T for i in range(1, order_of(G, s))):
            return True
    return False


CITED = (
    ("keating-witte", lambda G, S: keating_witte(G)),
    ("pk-subgroup", pk_subgroup),
    ("alspach-semidirect", alspach_semidirect),
)


def cited_router(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    g = cayley_of(G, S)
    for theorem, holds in CITED:
        if holds(G, g.genset):
            logger.info(f"cited: {theorem} hypotheses hold for {g!r}")
            outcome = search_backed("cited", g, {"theorem": theorem}, callbacks=callbacks)
            if not outcome.applied:
                logger.warning(f"cited: {theorem} holds but search found no cycle")
            return outcome
    return LemmaOutcome.fail("cited", "none-applicable")


class CitedLemma(LiftingLemma):
    tag = "cited"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        return cited_router(G, S, callbacks)
