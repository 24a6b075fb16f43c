# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Factor group lifting: repeat a quotient cycle whose endpoint generates the subgroup.

``fgl_lift`` needs a cyclic normal N and a hamiltonian cycle of Cay(G/N;S);
``coset_fgl`` is the same statement for a cyclic subgroup that need not be
normal, read on the coset multigraph H\\Cay(G;S). The edge variants repair a
quotient cycle whose endpoint lies in Φ(N) by swapping one edge for a parallel
one.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from enum import Enum

import sympy

from ...exceptions import HypothesisFailedError, NotCyclicError, NotNormalError
from ..callbacks import SearchCallbacks
from ..cayley import CayleyGraph, quotient_multigraph, verify_quotient_cycle
from ..group import Element, GroupTable, Label
from ..search import SearchConstraint, search_ham
from ..subgroups import SubgroupHandle, all_subgroups, is_normal, subgroup_closure
from ..walk import render_labels
from .base import LemmaOutcome, LiftingLemma, as_label, canonical, cayley_of, finish, name_of

logger = logging.getLogger("hamcayley.engine.lemmas.fgl")


class EdgeVariant(str, Enum):
    GenTwice = "gen-twice"
    Order2 = "order2"


def _lift(
    strategy: str,
    G: GroupTable,
    g: CayleyGraph,
    H: SubgroupHandle,
    quotient_cycle: Sequence[Label],
) -> LemmaOutcome:
    qm = quotient_multigraph(g, H)
    check = verify_quotient_cycle(qm, quotient_cycle)
    witness = {
        "subgroup_order": H.order,
        "quotient_cycle": render_labels(list(quotient_cycle)),
        "endpoint": name_of(G, check.endpoint),
    }
    if not check:
        return LemmaOutcome.fail(strategy, f"quotient-cycle-invalid: {check.reason}", **witness)
    if subgroup_closure(G, [check.endpoint]) != H:
        return LemmaOutcome.fail(strategy, "endpoint-does-not-generate", **witness)
    return finish(strategy, g, list(quotient_cycle) * H.order, witness)


def fgl_lift(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    N: SubgroupHandle,
    quotient_cycle: Sequence[Label],
) -> LemmaOutcome:
    """(s₁,…,sₘ)^|N| when the endpoint s₁⋯sₘ generates the cyclic normal subgroup N."""
    if not is_normal(G, N):
        raise NotNormalError(f"subgroup of order {N.order} is not normal")
    if not N.is_cyclic():
        raise NotCyclicError(f"subgroup of order {N.order} is not cyclic")
    return _lift("fgl", G, cayley_of(G, S), N, quotient_cycle)


def coset_fgl(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    H: SubgroupHandle,
    quotient_cycle: Sequence[Label],
) -> LemmaOutcome:
    """The coset version: H cyclic, the cycle hamiltonian in H\\Cay(G;S)."""
    if not H.is_cyclic():
        raise NotCyclicError(f"subgroup of order {H.order} is not cyclic")
    return _lift("coset-fgl", G, cayley_of(G, S), H, quotient_cycle)


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(sympy.factorint(n)) == 1


def _swap_partner(g: CayleyGraph, N: SubgroupHandle, s: Label, variant: EdgeVariant) -> Label:
    G = g.group
    s_el = g.element(s)
    if variant == EdgeVariant.Order2:
        if subgroup_closure(G, [G.mul(s_el, s_el)]) != N:
            raise HypothesisFailedError(f"{s.text}² does not lie in N outside Φ(N)")
        return canonical(g, s.inverse())
    for t in g.labels:
        if t == s:
            continue
        if subgroup_closure(G, [G.mul(G.inv[s_el], g.element(t))]) == N:
            return t
    raise HypothesisFailedError(f"no t in S ∪ S⁻¹ with ⟨{s.text}⁻¹t⟩ = N")


def fgl_edge_variants(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    N: SubgroupHandle,
    s: Label | str,
    variant: EdgeVariant | str = EdgeVariant.GenTwice,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    """FGL through a quotient cycle that uses an s-edge, swapping it for t when needed.

    Swapping one s-step for a t-step with s ≡ t (mod N) keeps the quotient
    walk and multiplies the endpoint by a conjugate of s⁻¹t, a generator of N.
    In a cyclic group of prime-power order, a generator times anything in Φ(N)
    still generates.
    """
    variant = EdgeVariant(variant)
    strategy = f"fgl-{variant.value}"
    g = cayley_of(G, S)
    s = canonical(g, as_label(s))
    if not is_normal(G, N):
        raise NotNormalError(f"subgroup of order {N.order} is not normal")
    if not N.is_cyclic():
        raise NotCyclicError(f"subgroup of order {N.order} is not cyclic")
    if not _is_prime_power(N.order):
        raise HypothesisFailedError(f"|N| = {N.order} is not a prime power")
    t = _swap_partner(g, N, s, variant)

    qm = quotient_multigraph(g, N)
    if qm.step(0, s) == 0:
        return LemmaOutcome.fail(strategy, f"{s.text} is a loop in the quotient")
    cycle = search_ham(qm, SearchConstraint(required_edge=(0, s)), callbacks)
    if cycle is None:
        return LemmaOutcome.fail(strategy, "no-quotient-cycle-through-edge", label=s.text)

    first = _lift(strategy, G, g, N, cycle)
    if first.applied:
        return first
    for i, label in enumerate(cycle):
        if label == s:
            swapped = cycle[:i] + [t] + cycle[i + 1:]
            break
        if label == s.inverse():
            swapped = cycle[:i] + [canonical(g, t.inverse())] + cycle[i + 1:]
            break
    else:
        return LemmaOutcome.fail(strategy, "quotient cycle lost its s-edge")
    outcome = _lift(strategy, G, g, N, swapped)
    outcome.witness["swapped"] = f"{s.text} -> {t.text}"
    return outcome


# ── Routing ───────────────────────────────────────────────────────────────


def lifting_subgroups(G: GroupTable) -> list[SubgroupHandle]:
    """Nontrivial proper cyclic normal subgroups, largest first."""
    found = [
        H
        for H in all_subgroups(G)
        if not H.is_trivial() and not H.is_whole() and H.is_cyclic() and is_normal(G, H)
    ]
    return sorted(found, key=lambda H: (-H.order, H.members))


class FGLLemma(LiftingLemma):
    tag = "fgl"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        g = cayley_of(G, S)
        last = LemmaOutcome.fail("fgl", "no cyclic normal subgroup")
        for N in lifting_subgroups(G):
            qm = quotient_multigraph(g, N)
            cycle = search_ham(qm, SearchConstraint(), callbacks)
            if cycle is None:
                last = LemmaOutcome.fail("fgl", "no-quotient-cycle", subgroup_order=N.order)
                continue
            outcome = _lift("fgl", G, g, N, cycle)
            if outcome.applied:
                return outcome
            last = outcome
            if not _is_prime_power(N.order):
                continue
            for s in g.labels:
                for variant in EdgeVariant:
                    try:
                        outcome = fgl_edge_variants(G, g, N, s, variant, callbacks)
                    except HypothesisFailedError as e:
                        last = LemmaOutcome.fail(f"fgl-{variant.value}", f"hypothesis-failed: {e}")
                        continue
                    if outcome.applied:
                        return outcome
                    last = outcome
        return last
