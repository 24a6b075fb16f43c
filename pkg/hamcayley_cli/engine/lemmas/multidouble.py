# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Lifting through a double edge of a prime-order coset multigraph.

If a hamiltonian cycle of H\\Cay(G;S) crosses one of two parallel edges,
crossing the other instead gives a second hamiltonian cycle with a different
endpoint. At most one of the two endpoints is trivial, and since |H| is prime
the other generates H, so ``coset_fgl`` lifts it.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping

import sympy

from ...exceptions import PrimeRequiredError
from ..callbacks import SearchCallbacks
from ..cayley import CayleyGraph, DoubleEdge, QuotientMultigraph, double_edges, quotient_multigraph
from ..group import Element, GroupTable, Label, evaluate
from ..search import SearchConstraint, search_ham
from ..subgroups import SubgroupHandle, sylow
from .base import LemmaOutcome, LiftingLemma, canonical, cayley_of, name_of
from .fgl import coset_fgl

logger = logging.getLogger("hamcayley.engine.lemmas.multidouble")


def _crossing(qm: QuotientMultigraph, cycle: list[Label], edge: DoubleEdge) -> int | None:
    """Index of the step of ``cycle`` that crosses the first parallel edge of ``edge``."""
    index = {label: i for i, label in enumerate(qm.labels)}
    a, _ = edge.cosets
    target = qm.instance_ids[a][index[edge.labels[0]]]
    c = 0
    for i, label in enumerate(cycle):
        li = index[label]
        if qm.instance_ids[c][li] == target:
            return i
        c = qm.step_table[c][li]
    return None


def switch_parallel(
    qm: QuotientMultigraph, cycle: list[Label], edge: DoubleEdge
) -> list[Label] | None:
    """The same quotient cycle crossing the other parallel edge of ``edge``."""
    i = _crossing(qm, cycle, edge)
    if i is None:
        return None
    _, visited = _walk_cosets(qm, cycle[:i])
    source = visited[-1] if visited else 0
    other = edge.labels[1] if source == edge.cosets[0] else edge.labels[1].inverse()
    return cycle[:i] + [canonical(qm.base, other)] + cycle[i + 1:]


def _walk_cosets(qm: QuotientMultigraph, labels: list[Label]) -> tuple[int, list[int]]:
    c, out = 0, []
    for label in labels:
        c = qm.step(c, label)
        out.append(c)
    return c, out


def multidouble(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    H: SubgroupHandle,
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    if not sympy.isprime(H.order):
        raise PrimeRequiredError(f"|H| = {H.order} is not prime")
    g = cayley_of(G, S)
    qm = quotient_multigraph(g, H)
    edges = double_edges(qm)
    if not edges:
        return LemmaOutcome.fail("multidouble", "no-double-edge", subgroup_order=H.order)

    for edge in edges:
        start, label = edge.cosets[0], edge.labels[0]
        cycle = search_ham(qm, SearchConstraint(required_edge=(start, label)), callbacks)
        if cycle is None:
            continue
        if _crossing(qm, cycle, edge) is None:
            continue
        other = switch_parallel(qm, cycle, edge)
        e1 = evaluate(G, cycle, g.genset)
        e2 = evaluate(G, other, g.genset)
        witness = {
            "double_edge": [qm.coset_name(c) for c in edge.cosets],
            "labels": [lab.text for lab in edge.labels],
            "endpoints": [name_of(G, e1), name_of(G, e2)],
        }
        if e1 == e2:
            logger.warning(f"parallel edges gave equal endpoints {name_of(G, e1)}")
            return LemmaOutcome.fail("multidouble", "endpoint-dichotomy-violated", **witness)
        chosen = cycle if e1 != 0 else other
        outcome = coset_fgl(G, g, H, chosen)
        outcome.strategy = "multidouble"
        outcome.witness.update(witness)
        return outcome
    return LemmaOutcome.fail("multidouble", "no-double-edge-cycle", subgroup_order=H.order)


class MultiDoubleLemma(LiftingLemma):
    tag = "multidouble"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        g = cayley_of(G, S)
        last = LemmaOutcome.fail("multidouble", "no prime-order subgroup")
        primes = sorted(sympy.primefactors(G.order), reverse=True)
        for p in primes:
            for H in sylow(G, p):
                if H.order != p:
                    continue
                outcome = multidouble(G, g, H, callbacks)
                if outcome.applied:
                    return outcome
                last = outcome
        return last
