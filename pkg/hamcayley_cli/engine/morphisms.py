# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Isomorphism testing and automorphism groups by generator-image backtracking.

Candidate images are pruned by element order and conjugacy-class size, and by
the orders of pairwise products of the images chosen so far.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cache

import numpy as np

from .group import Element, GroupTable, Homomorphism, element_orders, identity_map, order_of
from .subgroups import center, derived_subgroup, subgroup_closure

logger = logging.getLogger("hamcayley.engine.morphisms")


# ── Invariants ────────────────────────────────────────────────────────────


def conjugacy_classes(G: GroupTable) -> list[frozenset[Element]]:
    t, inv = G.table, G.inverse
    idx = np.arange(G.order)
    # conj[g, h] = g⁻¹ h g
    conj = t[t[inv[:, None], idx[None, :]], idx[:, None]]
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for h in range(G.order):
        if seen[h]:
            continue
        cls = frozenset(np.unique(conj[:, h]).tolist())
        seen[list(cls)] = True
        classes.append(cls)
    return classes


@cache
def element_signature(G: GroupTable) -> tuple[tuple[int, int], ...]:
    """(order, class size) per element."""
    orders = element_orders(G)
    sizes = [0] * G.order
    for cls in conjugacy_classes(G):
        for g in cls:
            sizes[g] = len(cls)
    return tuple(zip(orders, sizes))


def order_profile(G: GroupTable) -> tuple[int, ...]:
    """Sorted multiset of element orders."""
    return tuple(sorted(element_orders(G)))


@cache
def fingerprint(G: GroupTable) -> tuple:
    """Isomorphism invariant used to bucket candidates before backtracking."""
    return (
        G.order,
        order_profile(G),
        center(G).order,
        derived_subgroup(G).order,
        tuple(sorted(element_signature(G))),
    )


# ── Generating sets ───────────────────────────────────────────────────────


def small_generating_set(G: GroupTable) -> tuple[Element, ...]:
    """Greedy generating set favouring high-order elements, then pruned."""
    orders = element_orders(G)
    candidates = sorted(range(1, G.order), key=lambda g: (-orders[g], g))
    gens: list[Element] = []
    covered = {0}
    for g in candidates:
        if len(covered) == G.order:
            break
        if g not in covered:
            gens.append(g)
            covered = set(subgroup_closure(G, gens).members)
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if rest and subgroup_closure(G, rest).order == G.order:
            gens = rest
    return tuple(gens)


# ── Homomorphism extension ────────────────────────────────────────────────


def extend_homomorphism(
    source: GroupTable,
    target: GroupTable,
    images: Mapping[Element, Element],
) -> Homomorphism | None:
    """The homomorphism with the given generator images, or None if none exists.

    Walks the Cayley graph of the source on the given generators and checks
    φ(g·s) = φ(g)·φ(s) on every edge; the generators must generate the source.
    """
    srows, trows = source.rows, target.rows
    gens = list(images.items())
    phi = [-1] * source.order
    phi[0] = 0
    queue = deque([0])
    while queue:
        g = queue.popleft()
        pg = phi[g]
        for s, ts in gens:
            h = srows[g][s]
            value = trows[pg][ts]
            if phi[h] == -1:
                phi[h] = value
                queue.append(h)
            elif phi[h] != value:
                return None
    if -1 in phi:
        return None
    return Homomorphism(source, target, tuple(phi))


# ── Isomorphisms and automorphisms ────────────────────────────────────────


@dataclass
class _Backtrack:
    source: GroupTable
    target: GroupTable
    gens: tuple[Element, ...]
    candidates: list[list[Element]]
    bijective: bool = True

    def run(self, find_all: bool) -> list[Homomorphism]:
        found: list[Homomorphism] = []
        chosen: list[Element] = []

        def consistent(k: int, img: Element) -> bool:
            for j in range(k):
                prod_src = self.source.mul(self.gens[j], self.gens[k])
                prod_tgt = self.target.mul(chosen[j], img)
                if order_of(self.source, prod_src) != order_of(self.target, prod_tgt):
                    return False
            return True

        def extend(k: int) -> bool:
            if k == len(self.gens):
                phi = extend_homomorphism(self.source, self.target, dict(zip(self.gens, chosen)))
                if phi is not None and (not self.bijective or phi.is_bijective()):
                    found.append(phi)
                    return not find_all
                return False
            for img in self.candidates[k]:
                if img in chosen or not consistent(k, img):
                    continue
                chosen.append(img)
                if extend(k + 1):
                    return True
                chosen.pop()
            return False

        extend(0)
        return found


def _candidates(G1: GroupTable, G2: GroupTable, gens: tuple[Element, ...]) -> list[list[Element]]:
    sig1, sig2 = element_signature(G1), element_signature(G2)
    by_sig: dict[tuple[int, int], list[Element]] = {}
    for h, sig in enumerate(sig2):
        by_sig.setdefault(sig, []).append(h)
    return [by_sig.get(sig1[g], []) for g in gens]


def isomorphic(G1: GroupTable, G2: GroupTable) -> Homomorphism | None:
    """An isomorphism G1 → G2 if one exists."""
    if G1 is G2:
        return identity_map(G1)
    if fingerprint(G1) != fingerprint(G2):
        return None
    gens = small_generating_set(G1)
    found = _Backtrack(G1, G2, gens, _candidates(G1, G2, gens)).run(find_all=False)
    return found[0] if found else None


def automorphisms(G: GroupTable) -> list[Homomorphism]:
    """Every automorphism of G, identity first."""
    gens = small_generating_set(G)
    auts = _Backtrack(G, G, gens, _candidates(G, G, gens)).run(find_all=True)
    auts.sort(key=lambda phi: phi.image != tuple(range(G.order)))
    logger.debug(f"|Aut({G.name})| = {len(auts)}")
    return auts
