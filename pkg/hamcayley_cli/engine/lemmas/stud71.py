# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Lifting a cycle of K = ⟨S∖{s₁}⟩ along powers of s₁s₂.

A hamiltonian cycle of Cay(K; S∖{s₁}) through an s₂⁻¹-edge gives a
hamiltonian path P of K from e to s₂. The walk (s₁, P) moves from the coset
(s₁s₂)ⁱK to (s₁s₂)ⁱ⁺¹K, and when ⟨s₁s₂⟩ meets K trivially with
|s₁s₂| = |G:K|, repeating it |s₁s₂| times sweeps every coset once.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from itertools import permutations

from ...exceptions import HypothesisFailedError
from ..callbacks import SearchCallbacks
from ..cayley import CayleyGraph, build_cayley
from ..group import Element, GroupTable, Label, order_of
from ..search import SearchConstraint, search_ham
from ..subgroups import generates, subgroup_closure, subgroup_group
from ..walk import render_labels
from .base import LemmaOutcome, LiftingLemma, as_label, canonical, cayley_of, finish

logger = logging.getLogger("hamcayley.engine.lemmas.stud71")


def is_minimal(G: GroupTable, elements: list[Element]) -> bool:
    if not generates(G, elements):
        return False
    return all(not generates(G, elements[:i] + elements[i + 1:]) for i in range(len(elements)))


def stud71(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    s1: Label | str,
    s2: Label | str,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    g = cayley_of(G, S)
    s1, s2 = canonical(g, as_label(s1)), canonical(g, as_label(s2))
    if s1.name == s2.name:
        raise HypothesisFailedError("s₁ and s₂ must be distinct generators")
    if not is_minimal(G, list(g.genset.values())):
        raise HypothesisFailedError("S is not a minimal generating set")
    rest = {name: el for name, el in g.genset.items() if name != s1.name}
    if s2.name not in rest:
        raise HypothesisFailedError(f"{s2.name} is not a generator")
    K = subgroup_closure(G, rest.values())
    s1s2 = G.mul(g.element(s1), g.element(s2))
    r = order_of(G, s1s2)
    witness = {"s1": s1.text, "s2": s2.text, "order_s1s2": r, "subgroup_order": K.order}
    if r != K.index:
        raise HypothesisFailedError(f"|s₁s₂| = {r} but |G:K| = {K.index}")
    if any(G.power(s1s2, i) in K for i in range(1, r)):
        raise HypothesisFailedError("⟨s₁s₂⟩ meets K nontrivially")

    sub, inclusion = subgroup_group(G, K)
    index = {h: i for i, h in enumerate(K.members)}
    sub_graph = build_cayley(sub, {name: index[el] for name, el in rest.items()})
    back = canonical(sub_graph, s2.inverse())
    cycle_k = search_ham(sub_graph, SearchConstraint(required_edge=(0, back)), callbacks)
    if cycle_k is None:
        return LemmaOutcome.fail("stud71", "no-cycle-in-subgroup", **witness)
    if cycle_k and cycle_k[0] != back:
        k = cycle_k.index(back)
        cycle_k = cycle_k[k:] + cycle_k[:k]
    path = cycle_k[1:]
    witness["path"] = render_labels(path)
    # labels of K carry the same names as in S
    return finish("stud71", g, ([s1] + path) * r, witness)


class Stud71Lemma(LiftingLemma):
    tag = "stud71"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        g = cayley_of(G, S)
        if not is_minimal(G, list(g.genset.values())):
            return LemmaOutcome.fail("stud71", "S is not minimal")
        last = LemmaOutcome.fail("stud71", "no admissible pair")
        for n1, n2 in permutations(g.genset, 2):
            for s1 in (Label(n1), Label(n1, -1)):
                for s2 in (Label(n2), Label(n2, -1)):
                    try:
                        outcome = stud71(G, g, s1, s2, callbacks)
                    except HypothesisFailedError as e:
                        last = LemmaOutcome.fail("stud71", f"hypothesis-failed: {e}")
                        continue
                    if outcome.applied:
                        return outcome
                    last = outcome
        return last
