# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Cayley graphs, coset quotient multigraphs and walk verification.

Both graphs share one representation: vertices are right cosets Hg (singletons
for a Cayley graph), and each vertex has one step per label of S ∪ S⁻¹. The
step (C, s) and the step (Cs, s⁻¹) are the same undirected edge instance.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from ..exceptions import IdentityInGensetError
from .group import Element, GroupTable, Label, resolve_label
from .subgroups import SubgroupHandle, right_cosets, subgroup_closure, trivial_subgroup

logger = logging.getLogger("hamcayley.engine.cayley")


@dataclass(frozen=True, eq=False)
class CayleyGraph:
    """Cay(G;S); adjacency is right multiplication, computed on demand."""

    group: GroupTable
    genset: dict[str, Element]

    @cached_property
    def labels(self) -> tuple[Label, ...]:
        """S ∪ S⁻¹ in genset order; an involution contributes one label."""
        out = []
        for name, s in self.genset.items():
            out.append(Label(name))
            if self.group.inv[s] != s:
                out.append(Label(name, -1))
        return tuple(out)

    @cached_property
    def connection_set(self) -> frozenset[Element]:
        inv = self.group.inv
        return frozenset(self.genset.values()) | frozenset(inv[s] for s in self.genset.values())

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def degree(self) -> int:
        return len(self.connection_set)

    def element(self, label: Label) -> Element:
        return resolve_label(self.group, label, self.genset)

    def neighbors(self, v: Element) -> list[Element]:
        return [self.group.mul(v, self.element(label)) for label in self.labels]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        for v in range(self.order):
            for s in self.connection_set:
                graph.add_edge(v, self.group.mul(v, s))
        return graph

    def __repr__(self) -> str:
        return f"Cay({self.group.name}; {', '.join(self.genset)})"


def build_cayley(G: GroupTable, S: Mapping[str, Element] | Sequence[Element]) -> CayleyGraph:
    if not isinstance(S, Mapping):
        S = {G.element_name(s): s for s in S}
    if 0 in S.values():
        raise IdentityInGensetError("the identity cannot belong to a connection set")
    return CayleyGraph(G, dict(S))


def is_connected(g: CayleyGraph) -> bool:
    return subgroup_closure(g.group, g.genset.values()).order == g.order


# ── Walks ─────────────────────────────────────────────────────────────────


def eval_walk(
    g: CayleyGraph, labels: Sequence[Label], start: Element = 0
) -> tuple[Element, list[Element]]:
    """Endpoint and visited vertices: visited[k-1] = start·l₁⋯l_k."""
    rows = g.group.rows
    acc = start
    visited = []
    for label in labels:
        acc = rows[acc][g.element(label)]
        visited.append(acc)
    return acc, visited


@dataclass
class WalkCheck:
    """Outcome of checking a label sequence as a hamiltonian cycle or path."""

    ok: bool
    reason: str | None = None
    degenerate: bool = False
    endpoint: Element = 0
    visited: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _check_steps(g: CayleyGraph, labels: Sequence[Label]) -> str | None:
    allowed = g.connection_set
    for label in labels:
        if g.element(label) not in allowed:
            return f"label-not-in-connection-set: {label.text}"
    return None


def verify_ham_cycle(g: CayleyGraph, labels: Sequence[Label]) -> WalkCheck:
    """Every partial product from e distinct, |G| of them, closing at e."""
    n = g.order
    bad = _check_steps(g, labels)
    endpoint, visited = eval_walk(g, labels)
    degenerate = n <= 2
    if bad:
        return WalkCheck(False, bad, degenerate, endpoint, visited)
    if n == 1 and not labels:
        return WalkCheck(True, None, True, endpoint, visited)
    if len(labels) != n:
        return WalkCheck(False, f"length-mismatch: {len(labels)} labels for {n} vertices",
                         degenerate, endpoint, visited)
    if len(set(visited)) != n:
        return WalkCheck(False, "repeated-vertex", degenerate, endpoint, visited)
    if endpoint != 0:
        return WalkCheck(False, "not-closed", degenerate, endpoint, visited)
    return WalkCheck(True, None, degenerate, endpoint, visited)


def verify_ham_path(g: CayleyGraph, labels: Sequence[Label], start: Element = 0) -> WalkCheck:
    n = g.order
    bad = _check_steps(g, labels)
    endpoint, visited = eval_walk(g, labels, start)
    if bad:
        return WalkCheck(False, bad, False, endpoint, visited)
    if len(labels) != n - 1:
        return WalkCheck(False, f"length-mismatch: {len(labels)} labels for a path on {n} vertices",
                         False, endpoint, visited)
    if len({start, *visited}) != n:
        return WalkCheck(False, "repeated-vertex", False, endpoint, visited)
    return WalkCheck(True, None, False, endpoint, visited)


# ── Quotient multigraphs ──────────────────────────────────────────────────


@dataclass(frozen=True)
class EdgeInstance:
    """One undirected edge: the step ``label`` from ``coset`` (canonical side)."""

    coset: int
    label: Label
    target: int

    @property
    def is_loop(self) -> bool:
        return self.coset == self.target


@dataclass(frozen=True, eq=False)
class QuotientMultigraph:
    """H\\Cay(G;S) on right cosets, keeping parallel edges and loops."""

    base: CayleyGraph
    subgroup: SubgroupHandle
    coset_of: tuple[int, ...]
    representatives: tuple[Element, ...]
    prefix: str = "H"

    @property
    def order(self) -> int:
        return len(self.representatives)

    @property
    def labels(self) -> tuple[Label, ...]:
        return self.base.labels

    def step(self, coset: int, label: Label) -> int:
        rep = self.representatives[coset]
        return self.coset_of[self.base.group.mul(rep, self.base.element(label))]

    @cached_property
    def step_table(self) -> list[list[int]]:
        return [[self.step(c, label) for label in self.labels] for c in range(self.order)]

    @cached_property
    def instance_ids(self) -> list[list[int]]:
        """Edge instance id per (coset, label index) under (C, s) ≡ (Cs, s⁻¹)."""
        labels = self.labels
        index = {label: i for i, label in enumerate(labels)}
        partner = [index.get(label.inverse(), i) for i, label in enumerate(labels)]
        ids: dict[tuple[int, int], int] = {}
        table = [[-1] * len(labels) for _ in range(self.order)]
        for c in range(self.order):
            for li in range(len(labels)):
                d = self.step_table[c][li]
                key = min((c, li), (d, partner[li]))
                table[c][li] = ids.setdefault(key, len(ids))
        return table

    @cached_property
    def instances(self) -> list[EdgeInstance]:
        seen: dict[int, EdgeInstance] = {}
        for c in range(self.order):
            for li, label in enumerate(self.labels):
                iid = self.instance_ids[c][li]
                if iid not in seen:
                    seen[iid] = EdgeInstance(c, label, self.step_table[c][li])
        return [seen[i] for i in sorted(seen)]

    @property
    def loops(self) -> list[EdgeInstance]:
        return [e for e in self.instances if e.is_loop]

    def coset_name(self, coset: int) -> str:
        rep = self.representatives[coset]
        return self.prefix if rep == 0 else self.prefix + self.base.group.element_name(rep).replace(" ", "")

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.order))
        for e in self.instances:
            graph.add_edge(e.coset, e.target, label=e.label.text)
        return graph


def quotient_multigraph(g: CayleyGraph, H: SubgroupHandle | None = None, prefix: str = "H") -> QuotientMultigraph:
    H = H if H is not None else trivial_subgroup(g.group)
    coset_of, reps = right_cosets(g.group, H)
    return QuotientMultigraph(g, H, tuple(coset_of), tuple(reps), prefix)


@dataclass(frozen=True)
class DoubleEdge:
    cosets: tuple[int, int]
    labels: tuple[Label, Label]


def double_edges(qm: QuotientMultigraph) -> list[DoubleEdge]:
    """Coset pairs joined by at least two distinct edge instances."""
    by_pair: dict[tuple[int, int], list[EdgeInstance]] = {}
    for e in qm.instances:
        if e.is_loop:
            continue
        by_pair.setdefault((min(e.coset, e.target), max(e.coset, e.target)), []).append(e)
    out = []
    for pair, edges in sorted(by_pair.items()):
        if len(edges) >= 2:
            out.append(DoubleEdge(pair, (_oriented(edges[0], pair[0]), _oriented(edges[1], pair[0]))))
    return out


def _oriented(e: EdgeInstance, source: int) -> Label:
    """The label of ``e`` read from ``source``."""
    return e.label if e.coset == source else e.label.inverse()


def quotient_walk(
    qm: QuotientMultigraph, labels: Sequence[Label], start: int = 0
) -> tuple[int, list[int]]:
    index = {label: i for i, label in enumerate(qm.labels)}
    c, visited = start, []
    for label in labels:
        li = index.get(label)
        c = qm.step_table[c][li] if li is not None else qm.step(c, label)
        visited.append(c)
    return c, visited


def verify_quotient_cycle(qm: QuotientMultigraph, labels: Sequence[Label]) -> WalkCheck:
    """Hamiltonian cycle in the quotient multigraph; loops are never legal steps."""
    n = qm.order
    bad = _check_steps(qm.base, labels)
    end, visited = quotient_walk(qm, labels)
    g_end, _ = eval_walk(qm.base, labels)
    degenerate = n <= 2
    if bad:
        return WalkCheck(False, bad, degenerate, g_end, visited)
    if n == 1 and not labels:
        return WalkCheck(True, None, True, g_end, visited)
    if len(labels) != n:
        return WalkCheck(False, f"length-mismatch: {len(labels)} labels for {n} cosets",
                         degenerate, g_end, visited)
    prev = 0
    for c in visited:
        if c == prev:
            return WalkCheck(False, "loop-step", degenerate, g_end, visited)
        prev = c
    if len(set(visited)) != n:
        return WalkCheck(False, "repeated-vertex", degenerate, g_end, visited)
    if end != 0:
        return WalkCheck(False, "not-closed", degenerate, g_end, visited)
    return WalkCheck(True, None, degenerate, g_end, visited)


def uses_edge(qm: QuotientMultigraph, labels: Sequence[Label], cosets: tuple[int, int]) -> bool:
    _, visited = quotient_walk(qm, labels)
    path = [0, *visited]
    target = set(cosets)
    return any({a, b} == target for a, b in zip(path, path[1:]))
