# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Cycle × path: a hamiltonian cycle from a cycle of ⟨X⟩ and a path of G/⟨X⟩.

When every element of G centralizes or inverts ⟨X⟩, the map
f(i, j) = xᵢ·gⱼ embeds the prism C_m × P_{n+1} as a spanning subgraph of
Cay(G;S), and any hamiltonian cycle of the prism maps to one of G.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from itertools import combinations

from ...exceptions import HypothesisFailedError
from ..callbacks import SearchCallbacks
from ..cayley import CayleyGraph, build_cayley, quotient_multigraph
from ..group import Element, GroupTable, Label, conjugate
from ..search import SearchConstraint, SearchMode, search_ham
from ..subgroups import subgroup_closure, subgroup_group
from ..walk import render_labels
from .base import LemmaOutcome, LiftingLemma, as_label, cayley_of, finish

logger = logging.getLogger("hamcayley.engine.lemmas.cxl")


def prism_cycle(m: int, n: int) -> list[tuple[int, int]]:
    """A hamiltonian cycle of C_m × P_{n+1} as (i, j) vertices, starting at (0, 0).

    Layer 0 is swept in full, layers 1..n snake over columns 1..m-1 and column 0
    brings the walk back down. The last layer reaches column 0 directly (n odd)
    or through the wrap edge (n even).
    """
    if m < 2 or n < 0:
        raise ValueError("prism needs m >= 2 and n >= 0")
    if n == 0:
        return [(i, 0) for i in range(m)]
    out = [(i, 0) for i in range(m)]
    for j in range(1, n + 1):
        cols = range(m - 1, 0, -1) if j % 2 else range(1, m)
        out.extend((i, j) for i in cols)
    out.extend((0, j) for j in range(n, 0, -1))
    return out


def _centralize_or_invert(G: GroupTable, X: Iterable[Element]) -> list[bool]:
    """Per element of G: True if it centralizes ⟨X⟩, False if it inverts it."""
    X = list(X)
    inv = G.inv
    out = []
    for g in range(G.order):
        images = [conjugate(G, x, g) for x in X]
        if all(y == x for x, y in zip(X, images)):
            out.append(True)
        elif all(y == inv[x] for x, y in zip(X, images)):
            out.append(False)
        else:
            raise HypothesisFailedError(
                f"{G.element_name(g)} neither centralizes nor inverts ⟨X⟩"
            )
    return out


def cxl_product(
    G: GroupTable,
    S: Mapping[str, Element] | CayleyGraph,
    X: Iterable[Label | str],
    callbacks: SearchCallbacks | None = None,
) -> LemmaOutcome:
    g = cayley_of(G, S)
    X = [as_label(x) for x in X]
    xs = [g.element(x) for x in X]
    A = subgroup_closure(G, xs)
    if A.is_trivial():
        raise HypothesisFailedError("⟨X⟩ is trivial")
    if any(G.mul(a, b) != G.mul(b, a) for a, b in combinations(xs, 2)):
        raise HypothesisFailedError("⟨X⟩ is not abelian")
    _centralize_or_invert(G, xs)
    witness = {"X": [x.text for x in X], "subgroup_order": A.order}

    sub, inclusion = subgroup_group(G, A)
    index = {h: i for i, h in enumerate(A.members)}
    sub_graph = build_cayley(sub, {x.text: index[el] for x, el in zip(X, xs)})
    cycle_x = search_ham(sub_graph, SearchConstraint(), callbacks)
    if cycle_x is None:
        return LemmaOutcome.fail("cxl", "no-cycle-in-subgroup", **witness)
    x_vertices = [0]
    for label in cycle_x[:-1]:
        x_vertices.append(sub.mul(x_vertices[-1], sub_graph.element(label)))
    x_vertices = [inclusion(v) for v in x_vertices]

    if A.is_whole():
        path: list[Label] = []
    else:
        qm = quotient_multigraph(g, A)
        found = search_ham(qm, SearchConstraint(mode=SearchMode.Path), callbacks)
        if found is None:
            return LemmaOutcome.fail("cxl", "no-path-in-quotient", **witness)
        path = found
    g_vertices = [0]
    for label in path:
        g_vertices.append(G.mul(g_vertices[-1], g.element(label)))

    m, n = len(x_vertices), len(path)
    vertices = [G.mul(x_vertices[i], g_vertices[j]) for i, j in prism_cycle(m, n)]
    by_element = {}
    for label in g.labels:
        by_element.setdefault(g.element(label), label)
    cycle = []
    for a, b in zip(vertices, vertices[1:] + vertices[:1]):
        step = G.mul(G.inv[a], b)
        if step not in by_element:
            return LemmaOutcome.fail("cxl", "prism edge outside S ∪ S⁻¹", **witness)
        cycle.append(by_element[step])
    witness.update(m=m, n=n, path=render_labels(path))
    return finish("cxl", g, cycle, witness)


class CxLLemma(LiftingLemma):
    tag = "cxl"

    @staticmethod
    def attempt(G, S, callbacks=None) -> LemmaOutcome:
        g = cayley_of(G, S)
        labels = [Label(name) for name in g.genset]
        last = LemmaOutcome.fail("cxl", "no admissible X")
        for size in range(1, len(labels)):
            for X in combinations(labels, size):
                try:
                    outcome = cxl_product(G, g, X, callbacks)
                except HypothesisFailedError as e:
                    last = LemmaOutcome.fail("cxl", f"hypothesis-failed: {e}")
                    continue
                if outcome.applied:
                    return outcome
                last = outcome
        return last
