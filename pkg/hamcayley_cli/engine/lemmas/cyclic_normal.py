# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Lemmas for a generator s spanning a cyclic normal subgroup.

Both constructions walk a hamiltonian cycle (s₁,…,sₘ) of Cay(G/⟨s⟩;S) and
insert runs of s between its steps, so each coset of ⟨s⟩ is swept before the
walk moves on.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping

import sympy

from ...exceptions import HypothesisFailedError
from ..callbacks import SearchCallbacks
from ..cayley import CayleyGraph, quotient_multigraph, verify_quotient_cycle
from ..group import Element, GroupTable, Label, conjugate, evaluate, order_of
from ..search import SearchConstraint, search_ham
from ..subgroups import SubgroupHandle, center, is_normal, subgroup_closure
from ..walk import render_labels
from .base import LemmaOutcome, LiftingLemma, as_label, canonical, cayley_of, finish, name_of, search_backed

logger = logging.getLogger("hamcayley.engine.lemmas.cyclic_normal")


def _normal_cyclic(G: GroupTable, s_el: Element) -> SubgroupHandle:
    C = subgroup_closure(G, [s_el])
    if not is_normal(G, C):
        raise HypothesisFailedError(f"⟨{G.element_name(s_el)}⟩ is not normal")
    return C


def _quotient_cycle(
    g: CayleyGraph, C: SubgroupHandle, s: Label, callbacks: SearchCallbacks | None
) -> list[Label] | None:
    qm = quotient_multigraph(g, C)
    return search_ham(qm, SearchConstraint(forbidden_labels=frozenset({s.name})), callbacks)


def _run_signs(G: GroupTable, s_el: Element, quotient_cycle: list[Label], g: CayleyGraph) -> list[int] | None:
    """Signs a_i ∈ {±1} with s^{a₁}s₁ ⋯ s^{aₘ}sₘ = e, or None.

    Moving every s-power to the right gives (s₁⋯sₘ)·s^{Σ aᵢ rᵢ}, where s^{rᵢ}
    is s conjugated by the suffix sᵢ⋯sₘ.
    """
    n = order_of(G, s_el)
    exps = {G.power(s_el, k): k for k in range(n)}
    steps = [g.element(label) for label in quotient_cycle]
    endpoint = G.product(steps)
    j = exps[endpoint]
    coeffs = [0] * len(steps)
    suffix = 0
    for i in range(len(steps) - 1, -1, -1):
        suffix = G.mul(steps[i], suffix)
        coeffs[i] = exps[conjugate(G, s_el, suffix)]
    # reach[i][r] = sign chosen at step i-1 to land on residue r
    reach: list[dict[int, int]] = [{j % n: 0}]
    for c in coeffs:
        nxt: dict[int, int] = {}
        for r in reach[-1]:
            for a in (-1, 1):
                nxt.setdefault((r + a * c) % n, a)
        reach.append(nxt)
    if 0 not in reach[-1]:
        return None
    signs = [0] * len(coeffs)
    r = 0
    for i in range(len(coeffs), 0, -1):
        a = reach[i][r]
        signs[i - 1] = a
        r = (r - a * coeffs[i - 1]) % n
    return signs


def normal_easy(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    s: Label | str,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    """⟨s⟩ normal with s central or of prime order, plus a cycle of Cay(G/⟨s⟩;S)."""
    g = cayley_of(G, S)
    s = canonical(g, as_label(s))
    s_el = g.element(s)
    C = _normal_cyclic(G, s_el)
    n = C.order
    central = s_el in center(G)
    if not (central or sympy.isprime(n)):
        raise HypothesisFailedError(f"{s.text} is neither central nor of prime order")
    witness = {"generator": s.text, "central": central, "order": n}
    if C.is_whole():
        return finish("normal-easy", g, [s] * n, witness)

    qc = _quotient_cycle(g, C, s, callbacks)
    if qc is None:
        return LemmaOutcome.fail("normal-easy", "no-quotient-cycle", **witness)
    witness["quotient_cycle"] = render_labels(qc)
    signs = _run_signs(G, s_el, qc, g)
    if signs is None:
        logger.info(f"normal-easy: no run pattern closes for {s.text}, searching")
        return search_backed("normal-easy", g, witness, SearchConstraint(required_edge=(0, s)), callbacks)

    forward, backward = [s] * (n - 1), [canonical(g, s.inverse())] * (n - 1)
    cycle: list[Label] = []
    for a, step in zip(signs, qc):
        # n-1 steps of s multiply by s⁻¹
        cycle.extend(forward if a == -1 else backward)
        cycle.append(step)
    return finish("normal-easy", g, cycle, witness)


def cyclic_normal_2p(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    s: Label | str,
    p: int,
    q: int,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    """(s₁, s^{k−1}, …, sₘ, s^{k−1})^{|g|} with g the quotient endpoint and k = |s|/|g|."""
    g = cayley_of(G, S)
    s = canonical(g, as_label(s))
    s_el = g.element(s)
    if p == q or not (sympy.isprime(p) and sympy.isprime(q)):
        raise HypothesisFailedError(f"{p} and {q} are not distinct primes")
    C = _normal_cyclic(G, s_el)
    n = C.order
    Z = center(G)
    if (p * q) % n:
        raise HypothesisFailedError(f"|{s.text}| = {n} does not divide {p * q}")
    if G.power(s_el, p) not in Z:
        raise HypothesisFailedError(f"{s.text}^{p} is not central")
    if C.index % q:
        raise HypothesisFailedError(f"{q} does not divide |G/⟨{s.text}⟩| = {C.index}")

    if n != p * q or s_el in Z:
        outcome = normal_easy(G, g, s, callbacks)
        outcome.strategy = "cyclic-normal-2p"
        outcome.witness["routed"] = "normal-easy"
        return outcome

    qc = _quotient_cycle(g, C, s, callbacks)
    if qc is None:
        return LemmaOutcome.fail("cyclic-normal-2p", "no-quotient-cycle", generator=s.text)
    qm = quotient_multigraph(g, C)
    endpoint = verify_quotient_cycle(qm, qc).endpoint
    k = n // order_of(G, endpoint)
    period: list[Label] = []
    for step in qc:
        period.append(step)
        period.extend([s] * (k - 1))
    witness = {
        "generator": s.text,
        "quotient_cycle": render_labels(qc),
        "endpoint": name_of(G, endpoint),
        "k": k,
    }
    if evaluate(G, period, g.genset) != endpoint:
        logger.warning("cyclic-normal-2p: period endpoint differs from the quotient endpoint")
        return LemmaOutcome.fail("cyclic-normal-2p", "endpoint-identity-violated", **witness)
    return finish("cyclic-normal-2p", g, period * order_of(G, endpoint), witness)


# ── Routing ───────────────────────────────────────────────────────────────


def _positive_labels(g: CayleyGraph) -> list[Label]:
    return [Label(name) for name in g.genset]


class NormalEasyLemma(LiftingLemma):
    tag = "normal-easy"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        g = cayley_of(G, S)
        Z = center(G)
        ordered = sorted(_positive_labels(g), key=lambda lab: g.element(lab) not in Z)
        last = LemmaOutcome.fail("normal-easy", "no generator spans a suitable normal subgroup")
        for s in ordered:
            try:
                outcome = normal_easy(G, g, s, callbacks)
            except HypothesisFailedError as e:
                last = LemmaOutcome.fail("normal-easy", f"hypothesis-failed: {e}")
                continue
            if outcome.applied:
                return outcome
            last = outcome
        return last


class CyclicNormal2pLemma(LiftingLemma):
    tag = "cyclic-normal-2p"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        g = cayley_of(G, S)
        last = LemmaOutcome.fail("cyclic-normal-2p", "no generator of order pq")
        for s in _positive_labels(g):
            n = order_of(G, g.element(s))
            factors = sympy.factorint(n)
            if len(factors) != 2 or any(e != 1 for e in factors.values()):
                continue
            a, b = sorted(factors)
            for p, q in ((a, b), (b, a)):
                try:
                    outcome = cyclic_normal_2p(G, g, s, p, q, callbacks)
                except HypothesisFailedError as e:
                    last = LemmaOutcome.fail("cyclic-normal-2p", f"hypothesis-failed: {e}")
                    continue
                if outcome.applied:
                    return outcome
                last = outcome
        return last
