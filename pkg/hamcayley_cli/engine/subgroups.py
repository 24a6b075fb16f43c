# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Subgroups, cosets, quotients and the structural subgroups of a group table."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cache, cached_property

import numpy as np
import sympy

from ..exceptions import NotNormalError, PrimeRequiredError
from .group import Element, GroupTable, Homomorphism, order_of

logger = logging.getLogger("hamcayley.engine.subgroups")


@dataclass(frozen=True, eq=False)
class SubgroupHandle:
    """A subgroup given by its sorted member indices."""

    parent: GroupTable
    members: tuple[Element, ...]
    generators: tuple[Element, ...] = ()

    @classmethod
    def of(
        cls, parent: GroupTable, members: Iterable[Element], generators: Iterable[Element] = ()
    ) -> SubgroupHandle:
        return cls(parent, tuple(sorted(set(members))), tuple(generators))

    @cached_property
    def _member_set(self) -> frozenset[Element]:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, g: object) -> bool:
        return g in self._member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubgroupHandle)
            and other.parent is self.parent
            and other._member_set == self._member_set
        )

    def __hash__(self) -> int:
        return hash(self._member_set)

    def issubset(self, other: SubgroupHandle) -> bool:
        return self._member_set <= other._member_set

    def is_trivial(self) -> bool:
        return self.members == (0,)

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def is_cyclic(self) -> bool:
        return any(order_of(self.parent, g) == self.order for g in self.members)

    def cyclic_generator(self) -> Element | None:
        for g in self.members:
            if order_of(self.parent, g) == self.order:
                return g
        return None

    def __repr__(self) -> str:
        return f"SubgroupHandle(order={self.order} in {self.parent.name})"


# ── Closure ───────────────────────────────────────────────────────────────


def subgroup_closure(G: GroupTable, X: Iterable[Element]) -> SubgroupHandle:
    """Smallest subgroup containing ``X``: the orbit of the identity under right multiplication."""
    gens = tuple(dict.fromkeys(g for g in X if g != 0))
    rows = G.rows
    seen = {0}
    queue = deque([0])
    while queue:
        g = queue.popleft()
        row = rows[g]
        for s in gens:
            h = row[s]
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return SubgroupHandle.of(G, seen, gens)


def trivial_subgroup(G: GroupTable) -> SubgroupHandle:
    return SubgroupHandle.of(G, (0,))


def whole_group(G: GroupTable) -> SubgroupHandle:
    return SubgroupHandle.of(G, range(G.order), G.gen_names.values())


def generates(G: GroupTable, X: Iterable[Element]) -> bool:
    return subgroup_closure(G, X).order == G.order


# ── Normality and cosets ──────────────────────────────────────────────────


def is_normal(G: GroupTable, H: SubgroupHandle) -> bool:
    """g⁻¹Hg = H for every g; checking generators of H against generators of G suffices."""
    rows, inv = G.rows, G.inv
    gens = H.generators or H.members
    conjugators = tuple(G.gen_names.values()) or range(G.order)
    if subgroup_closure(G, conjugators).order != G.order:
        conjugators = range(G.order)
    for g in conjugators:
        gi = inv[g]
        for h in gens:
            if rows[rows[gi][h]][g] not in H:
                return False
    return True


def normal_closure(G: GroupTable, X: Iterable[Element]) -> SubgroupHandle:
    rows, inv = G.rows, G.inv
    xs = set(X)
    return subgroup_closure(G, {rows[rows[inv[g]][x]][g] for x in xs for g in range(G.order)})


def right_cosets(G: GroupTable, H: SubgroupHandle) -> tuple[list[int], list[Element]]:
    """Right cosets Hg: per-element coset index and one representative per coset.

    Representatives are the shortest element names (ties broken by name), and
    the subgroup itself is coset 0 with the identity as its representative.
    """
    rows = G.rows
    coset_of = [-1] * G.order
    reps: list[Element] = []
    glued = [nm.replace(" ", "") for nm in G.element_names]
    by_name = sorted(range(G.order), key=lambda g: (g != 0, len(glued[g]), glued[g]))
    for g in by_name:
        if coset_of[g] != -1:
            continue
        idx = len(reps)
        reps.append(g)
        for h in H.members:
            coset_of[rows[h][g]] = idx
    return coset_of, reps


def conjugate_subgroup(G: GroupTable, H: SubgroupHandle, g: Element) -> SubgroupHandle:
    rows, gi = G.rows, G.inv[g]
    return SubgroupHandle.of(G, (rows[rows[gi][h]][g] for h in H.members))


# ── Quotients ─────────────────────────────────────────────────────────────


def quotient(G: GroupTable, N: SubgroupHandle, name: str | None = None) -> tuple[GroupTable, Homomorphism]:
    """G/N with the projection; every name of G resolves to its coset."""
    if not is_normal(G, N):
        raise NotNormalError(f"subgroup of order {N.order} is not normal in {G.name}")
    coset_of, reps = right_cosets(G, N)
    rows = G.rows
    table = np.array([[coset_of[rows[a][b]] for b in reps] for a in reps], dtype=np.int32)
    element_names = [G.element_names[r] for r in reps]
    aliases: dict[str, Element] = {nm: coset_of[g] for nm, g in G.aliases.items()}
    for g, nm in enumerate(G.element_names):
        aliases.setdefault(nm, coset_of[g])
    gen_names = {nm: coset_of[g] for nm, g in G.gen_names.items()}
    Q = GroupTable.from_table(
        name or f"{G.name}/N{N.order}", table, gen_names, element_names, aliases
    )
    return Q, Homomorphism(G, Q, tuple(coset_of))


def subgroup_group(G: GroupTable, H: SubgroupHandle, name: str | None = None) -> tuple[GroupTable, Homomorphism]:
    """H as a group table of its own, with the inclusion into G."""
    members = H.members
    index = {g: i for i, g in enumerate(members)}
    rows = G.rows
    table = np.array([[index[rows[a][b]] for b in members] for a in members], dtype=np.int32)
    names = [G.element_names[g] for g in members]
    gen_names = {nm: index[g] for nm, g in G.gen_names.items() if g in index}
    aliases = {nm: index[g] for nm, g in G.aliases.items() if g in index}
    sub = GroupTable.from_table(name or f"{G.name}[{H.order}]", table, gen_names, names, aliases)
    return sub, Homomorphism(sub, G, members)


# ── Structural subgroups ──────────────────────────────────────────────────


def center(G: GroupTable) -> SubgroupHandle:
    t = G.table
    members = np.nonzero((t == t.T).all(axis=1))[0].tolist()
    return SubgroupHandle.of(G, members)


def derived_subgroup(G: GroupTable) -> SubgroupHandle:
    t, inv = G.table, G.inverse
    idx = np.arange(G.order)
    comms = t[t[t[inv[:, None], inv[None, :]], idx[:, None]], idx[None, :]]
    return subgroup_closure(G, np.unique(comms).tolist())


def centralizer(G: GroupTable, X: Iterable[Element]) -> SubgroupHandle:
    rows = G.rows
    xs = list(X)
    return SubgroupHandle.of(G, (g for g in range(G.order) if all(rows[g][x] == rows[x][g] for x in xs)))


def cyclic_subgroups(G: GroupTable) -> list[SubgroupHandle]:
    seen: dict[frozenset[Element], SubgroupHandle] = {}
    for g in range(G.order):
        H = subgroup_closure(G, (g,))
        seen.setdefault(frozenset(H.members), H)
    return list(seen.values())


def all_subgroups(G: GroupTable) -> list[SubgroupHandle]:
    """Every subgroup: cyclic subgroups, closed under pairwise joins."""
    return list(_lattice(G))


@cache
def _lattice(G: GroupTable) -> tuple[SubgroupHandle, ...]:
    cyclics = cyclic_subgroups(G)
    found: dict[frozenset[Element], SubgroupHandle] = {frozenset(H.members): H for H in cyclics}
    queue = deque(found.values())
    while queue:
        H = queue.popleft()
        for C in cyclics:
            g = C.generators[0] if C.generators else 0
            if g in H:
                continue
            J = subgroup_closure(G, H.generators + (g,))
            key = frozenset(J.members)
            if key not in found:
                found[key] = J
                queue.append(J)
    logger.debug(f"{G.name}: {len(found)} subgroups")
    return tuple(sorted(found.values(), key=lambda H: (H.order, H.members)))

def maximal_subgroups(G: GroupTable) -> list[SubgroupHandle]:
    proper = [H for H in _lattice(G) if H.order < G.order]
    return [
        H
        for H in proper
        if not any(K.order > H.order and H.issubset(K) for K in proper)
    ]


def frattini(G: GroupTable) -> SubgroupHandle:
    maxes = maximal_subgroups(G)
    if not maxes:
        return trivial_subgroup(G)
    common = set(maxes[0].members)
    for M in maxes[1:]:
        common &= set(M.members)
    return subgroup_closure(G, common) if common != {0} else trivial_subgroup(G)


@dataclass(frozen=True)
class Structure:
    center: SubgroupHandle
    derived: SubgroupHandle
    frattini: SubgroupHandle


def structure(G: GroupTable) -> Structure:
    return Structure(center(G), derived_subgroup(G), frattini(G))


# ── Sylow subgroups ───────────────────────────────────────────────────────


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow(G: GroupTable, p: int) -> list[SubgroupHandle]:
    """All Sylow p-subgroups: grow one p-subgroup greedily, then take its conjugates."""
    if not sympy.isprime(p):
        raise PrimeRequiredError(f"{p} is not prime")
    if G.order % p != 0:
        raise PrimeRequiredError(f"{p} does not divide |{G.name}| = {G.order}")
    target = p_part(G.order, p)
    p_elements = [g for g in range(1, G.order) if _is_power_of(order_of(G, g), p)]
    H = trivial_subgroup(G)
    while H.order < target:
        for g in p_elements:
            if g in H:
                continue
            K = subgroup_closure(G, H.generators + (g,))
            if _is_power_of(K.order, p):
                H = K
                break
        else:
            break
    found: dict[frozenset[Element], SubgroupHandle] = {}
    for g in range(G.order):
        C = conjugate_subgroup(G, H, g)
        key = frozenset(C.members)
        if key not in found:
            found[key] = SubgroupHandle.of(G, C.members, _conjugate_all(G, H.generators, g))
    return sorted(found.values(), key=lambda S: S.members)


def _conjugate_all(G: GroupTable, xs: Iterable[Element], g: Element) -> tuple[Element, ...]:
    rows, gi = G.rows, G.inv[g]
    return tuple(rows[rows[gi][x]][g] for x in xs)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1
