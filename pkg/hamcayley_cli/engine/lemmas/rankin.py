# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Directed cycles for two generators with (ab⁻¹)² = e, and their skewed use.

The directed cycle exists whenever (ab⁻¹)² = e and ⟨a,b⟩ is the whole group.
It is found by exhaustive directed search. The skewed form runs it on
H = ⟨at, bt⟩ of index 2 and reads each arc st as the two steps s, t.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from itertools import permutations

from ...exceptions import HypothesisFailedError, IdentityInGensetError
from ..callbacks import SearchCallbacks
from ..cayley import CayleyGraph, build_cayley
from ..group import Element, GroupTable, Label, order_of
from ..search import SearchConstraint, search_directed_ham
from ..subgroups import generates, subgroup_closure, subgroup_group
from .base import SEARCH_BACKED, LemmaOutcome, LiftingLemma, as_label, canonical, cayley_of, finish

logger = logging.getLogger("hamcayley.engine.lemmas.rankin")


def _check_square(G: GroupTable, a: Element, b: Element) -> None:
    ab = G.mul(a, G.inv[b])
    if order_of(G, ab) != 2:
        raise HypothesisFailedError(f"|ab⁻¹| = {order_of(G, ab)}, not 2")


def rankin(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    a: Label | str,
    b: Label | str,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    """A directed hamiltonian cycle of the Cayley digraph on {a, b}."""
    g = cayley_of(G, S)
    a, b = canonical(g, as_label(a)), canonical(g, as_label(b))
    a_el, b_el = g.element(a), g.element(b)
    _check_square(G, a_el, b_el)
    if not generates(G, [a_el, b_el]):
        raise HypothesisFailedError("⟨a, b⟩ is not the whole group")
    digraph = CayleyGraph(G, {"a": a_el, "b": b_el})
    found = search_directed_ham(digraph, SearchConstraint(), callbacks)
    witness = {"a": a.text, "b": b.text, "route": SEARCH_BACKED}
    if found is None:
        return LemmaOutcome.fail("rankin", "no-directed-cycle", **witness)
    cycle = [a if label.name == "a" else b for label in found]
    return finish("rankin", g, cycle, witness)


def rankin_skewed(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    t: Label | str,
    a: Label | str,
    b: Label | str,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    """(s₁, t, s₂, t, …, sₙ, t) from a directed cycle (s₁t, …, sₙt) of Cay(⟨at,bt⟩)."""
    g = cayley_of(G, S)
    t, a, b = (canonical(g, as_label(x)) for x in (t, a, b))
    t_el, a_el, b_el = g.element(t), g.element(a), g.element(b)
    if not generates(G, [t_el, a_el, b_el]):
        raise HypothesisFailedError("⟨t, a, b⟩ is not the whole group")
    _check_square(G, a_el, b_el)
    at, bt = G.mul(a_el, t_el), G.mul(b_el, t_el)
    H = subgroup_closure(G, [at, bt])
    if H.index != 2:
        raise HypothesisFailedError(f"⟨at, bt⟩ has index {H.index}, not 2")

    sub, _ = subgroup_group(G, H)
    index = {h: i for i, h in enumerate(H.members)}
    try:
        digraph = build_cayley(sub, {"a": index[at], "b": index[bt]})
    except IdentityInGensetError:
        raise HypothesisFailedError("at or bt is the identity")
    found = search_directed_ham(digraph, SearchConstraint(), callbacks)
    witness = {"t": t.text, "a": a.text, "b": b.text, "subgroup_order": H.order}
    if found is None:
        return LemmaOutcome.fail("rankin-skewed", "no-directed-cycle", **witness)
    cycle: list[Label] = []
    for label in found:
        cycle.extend((a if label.name == "a" else b, t))
    if len(cycle) != G.order:
        logger.warning(f"rankin-skewed: interleaved walk has {len(cycle)} steps for order {G.order}")
        return LemmaOutcome.fail("rankin-skewed", "length-mismatch", **witness)
    return finish("rankin-skewed", g, cycle, witness)


# ── Routing ───────────────────────────────────────────────────────────────


class RankinLemma(LiftingLemma):
    tag = "rankin"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        g = cayley_of(G, S)
        if len(g.genset) != 2:
            return LemmaOutcome.fail("rankin", "needs exactly two generators")
        x, y = (Label(name) for name in g.genset)
        last = LemmaOutcome.fail("rankin", "no admissible pair")
        for a, b in ((x, y), (x, y.inverse()), (x.inverse(), y), (x.inverse(), y.inverse())):
            try:
                outcome = rankin(G, g, a, b, callbacks)
            except HypothesisFailedError as e:
                last = LemmaOutcome.fail("rankin", f"hypothesis-failed: {e}")
                continue
            if outcome.applied:
                return outcome
            last = outcome
        return last


class RankinSkewedLemma(LiftingLemma):
    tag = "rankin-skewed"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        g = cayley_of(G, S)
        last = LemmaOutcome.fail("rankin-skewed", "no admissible triple")
        for t, a, b in permutations(g.labels, 3):
            try:
                outcome = rankin_skewed(G, g, t, a, b, callbacks)
            except HypothesisFailedError as e:
                last = LemmaOutcome.fail("rankin-skewed", f"hypothesis-failed: {e}")
                continue
            if outcome.applied:
                return outcome
            last = outcome
        return last
