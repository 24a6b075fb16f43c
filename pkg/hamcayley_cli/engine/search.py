# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Exact backtracking search for hamiltonian cycles and paths.

The search is exhaustive: ``None`` means no cycle exists, and running out of time
raises :class:`SearchTimeoutError` instead. Moves are tried in order of the
fewest onward neighbours, ties broken by label order, so single-threaded runs
are deterministic.

Pruning keeps every solution: after each move, each unvisited vertex must keep
enough usable neighbours and the unvisited vertices must stay reachable from
the current end of the path.
"""

from __future__ import annotations

import logging
import sys
import threading
import time
from collections import deque
from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from enum import Enum

from ..config import get_search_timeout
from ..exceptions import SearchTimeoutError
from .callbacks import SearchCallbacks
from .cayley import CayleyGraph, QuotientMultigraph, quotient_multigraph
from .group import Label

logger = logging.getLogger("hamcayley.engine.search")

CHECK_EVERY = 1024


class SearchMode(str, Enum):
    Cycle = "cycle"
    Path = "path"


@dataclass(frozen=True)
class SearchConstraint:
    required_edge: tuple[int, Label] | None = None
    """(vertex, label): the search is rooted at this step."""

    forbidden_labels: frozenset[str] = frozenset()
    """Generator names (both directions) or signed label texts to leave out."""

    mode: SearchMode = SearchMode.Cycle
    start: int = 0
    seed: int = 0
    """Rotates the label order; the same seed always gives the same answer."""

    timeout: float | None = None
    """Seconds; None uses the configured default, 0 disables the limit."""

    prune: bool = True


# ── Step graphs ───────────────────────────────────────────────────────────


@dataclass
class _StepGraph:
    n: int
    labels: list[Label]
    succ: list[list[int]]
    instance: list[list[int]]
    directed: bool
    nbrs: list[set[int]] = field(default_factory=list)
    preds: list[set[int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.nbrs = [{w for w in row if w != v} for v, row in enumerate(self.succ)]
        if self.directed:
            self.preds = [set() for _ in range(self.n)]
            for v, row in enumerate(self.succ):
                for w in row:
                    if w != v:
                        self.preds[w].add(v)


def _allowed(label: Label, forbidden: frozenset[str]) -> bool:
    return label.name not in forbidden and label.text not in forbidden


def _undirected(g: CayleyGraph | QuotientMultigraph, c: SearchConstraint) -> _StepGraph:
    qm = g if isinstance(g, QuotientMultigraph) else quotient_multigraph(g)
    keep = [i for i, label in enumerate(qm.labels) if _allowed(label, c.forbidden_labels)]
    all_labels = set(qm.labels)
    kept = {qm.labels[i] for i in keep}
    # forbidding one direction of a label leaves arcs that can only be crossed one way
    one_way = any(l.inverse() in all_labels and l.inverse() not in kept for l in kept)
    if keep and c.seed:
        k = c.seed % len(keep)
        keep = keep[k:] + keep[:k]
    return _StepGraph(
        qm.order,
        [qm.labels[i] for i in keep],
        [[row[i] for i in keep] for row in qm.step_table],
        [[row[i] for i in keep] for row in qm.instance_ids],
        directed=one_way,
    )


def _directed(g: CayleyGraph, c: SearchConstraint) -> _StepGraph:
    labels = [Label(name) for name in g.genset if _allowed(Label(name), c.forbidden_labels)]
    if labels and c.seed:
        k = c.seed % len(labels)
        labels = labels[k:] + labels[:k]
    rows = g.group.rows
    gens = [g.element(label) for label in labels]
    succ = [[rows[v][s] for s in gens] for v in range(g.order)]
    instance = [[v * len(labels) + i for i in range(len(labels))] for v in range(g.order)]
    return _StepGraph(g.order, labels, succ, instance, directed=True)


# ── Backtracking ──────────────────────────────────────────────────────────


class _Searcher:
    def __init__(
        self,
        sg: _StepGraph,
        mode: SearchMode,
        prune: bool,
        deadline: float | None,
        callbacks: SearchCallbacks,
        stop: threading.Event,
    ):
        self.sg = sg
        self.cycle = mode == SearchMode.Cycle
        self.prune = prune
        self.deadline = deadline
        self.callbacks = callbacks
        self.stop = stop
        self.nodes = 0
        self.started = time.monotonic()
        self.visited = [False] * sg.n
        self.path: list[int] = []
        self.used: set[int] = set()
        self.start = 0

    def run(self, start: int, first: int | None = None) -> list[int] | None:
        sg = self.sg
        self.start = start
        self.visited[start] = True
        if first is None:
            return self.path if self._dfs(start, 0) else None
        w = sg.succ[start][first]
        if self.visited[w]:
            return None
        self._push(first, w, sg.instance[start][first])
        if self.prune and not self._feasible(start, w, 1):
            return None
        return self.path if self._dfs(w, 1) else None

    def _push(self, li: int, w: int, iid: int) -> None:
        self.visited[w] = True
        self.path.append(li)
        self.used.add(iid)

    def _pop(self, w: int, iid: int) -> None:
        self.visited[w] = False
        self.path.pop()
        self.used.discard(iid)

    def _tick(self, depth: int) -> None:
        self.nodes += 1
        if self.nodes % CHECK_EVERY:
            return
        self.callbacks.on_progress(self.nodes, depth)
        if self.stop.is_set() or self.callbacks.is_terminated():
            raise _Abandoned()
        if self.deadline is not None and time.monotonic() > self.deadline:
            elapsed = time.monotonic() - self.started
            trace = [self.sg.labels[i].text for i in self.path]
            raise SearchTimeoutError(
                f"search exceeded its time budget after {self.nodes} nodes", elapsed, trace
            )

    def _dfs(self, v: int, depth: int) -> bool:
        sg = self.sg
        self._tick(depth)
        if depth == sg.n - 1:
            if not self.cycle:
                return True
            for li, w in enumerate(sg.succ[v]):
                if w == self.start and sg.instance[v][li] not in self.used:
                    self.path.append(li)
                    return True
            return False
        moves = []
        for li, w in enumerate(sg.succ[v]):
            if self.visited[w] or sg.instance[v][li] in self.used:
                continue
            onward = sum(1 for x in sg.nbrs[w] if not self.visited[x])
            moves.append((onward, li, w))
        moves.sort()
        for _, li, w in moves:
            if self.visited[w]:
                continue
            iid = sg.instance[v][li]
            self._push(li, w, iid)
            if (not self.prune or self._feasible(v, w, depth + 1)) and self._dfs(w, depth + 1):
                return True
            self._pop(w, iid)
        return False

    def _feasible(self, prev: int, end: int, depth: int) -> bool:
        sg, visited = self.sg, self.visited
        remaining = sg.n - depth - 1
        if remaining == 0:
            return True
        need = 2 if self.cycle else 1
        if sg.directed:
            for u in sg.nbrs[prev]:
                if not visited[u] and u != end:
                    if not any(not visited[x] or x == end for x in sg.preds[u]):
                        return False
            if self.cycle and not any(not visited[x] for x in sg.preds[self.start]):
                return False
        else:
            for u in sg.nbrs[prev]:
                if visited[u]:
                    continue
                avail = sum(
                    1
                    for x in sg.nbrs[u]
                    if not visited[x] or x == end or (self.cycle and x == self.start)
                )
                if avail < need:
                    return False
            if self.cycle and not any(not visited[x] for x in sg.nbrs[self.start]):
                return False
        # unvisited vertices reachable from the end of the path
        seen = {end}
        queue = deque([end])
        reached = 0
        while queue:
            x = queue.popleft()
            for y in sg.nbrs[x]:
                if not visited[y] and y not in seen:
                    seen.add(y)
                    reached += 1
                    queue.append(y)
        return reached == remaining


class _Abandoned(Exception):
    pass


# ── Public entry points ───────────────────────────────────────────────────


def _tiny(sg: _StepGraph, c: SearchConstraint) -> list[int] | None:
    """Graphs on one or two vertices: the degenerate closed walks."""
    start = c.start
    if sg.n == 1:
        return []
    other = 1 - start
    firsts = [li for li, w in enumerate(sg.succ[start]) if w == other]
    if c.required_edge is not None:
        firsts = [li for li in firsts if sg.labels[li] == c.required_edge[1]]
    if not firsts:
        return None
    li = firsts[0]
    if c.mode == SearchMode.Path:
        return [li]
    backs = [lj for lj, w in enumerate(sg.succ[other]) if w == start]
    fresh = [lj for lj in backs if sg.instance[other][lj] != sg.instance[start][li]]
    back = (fresh or backs or [None])[0]
    return None if back is None else [li, back]


def _run(
    sg: _StepGraph,
    c: SearchConstraint,
    callbacks: SearchCallbacks | None,
) -> list[Label] | None:
    callbacks = callbacks or SearchCallbacks()
    timeout = get_search_timeout() if c.timeout is None else c.timeout
    deadline = time.monotonic() + timeout if timeout else None

    start, first = c.start, None
    if c.required_edge is not None:
        start, label = c.required_edge
        if label not in sg.labels:
            logger.debug(f"required label {label.text} is not available")
            return None
        first = sg.labels.index(label)

    if sg.n <= 2:
        if sg.n == 2 and c.required_edge is not None:
            c = SearchConstraint(c.required_edge, c.forbidden_labels, c.mode, start)
        found = _tiny(sg, c)
        return None if found is None else _rotate(sg, start, found, c.mode)

    if sys.getrecursionlimit() < sg.n + 200:
        sys.setrecursionlimit(sg.n + 200)

    stop = threading.Event()
    firsts = [first] if first is not None else list(range(len(sg.labels)))
    workers = callbacks.max_workers
    logger.debug(f"search on {sg.n} vertices, {len(sg.labels)} labels, workers={workers or 1}")

    if workers <= 1 or len(firsts) == 1:
        searcher = _Searcher(sg, c.mode, c.prune, deadline, callbacks, stop)
        try:
            found = searcher.run(start, first)
        except _Abandoned:
            return None
        logger.debug(f"search expanded {searcher.nodes} nodes")
        return None if found is None else _rotate(sg, start, found, c.mode)

    def branch(li: int) -> list[int] | None:
        searcher = _Searcher(sg, c.mode, c.prune, deadline, callbacks, stop)
        try:
            return searcher.run(start, li)
        except _Abandoned:
            return None

    with ThreadPoolExecutor(max_workers=workers) as pool:
        pending = {pool.submit(branch, li) for li in firsts}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for future in done:
                result = future.result()
                if result is not None:
                    stop.set()
                    return _rotate(sg, start, result, c.mode)
    return None


def _rotate(sg: _StepGraph, start: int, path: list[int], mode: SearchMode) -> list[Label]:
    """Labels of a cycle found from ``start``, rotated to begin at vertex 0."""
    labels = [sg.labels[i] for i in path]
    if mode == SearchMode.Path or start == 0 or not path:
        return labels
    v, k = start, 0
    for k, li in enumerate(path):
        if v == 0:
            break
        v = sg.succ[v][li]
    else:
        k = 0 if v == 0 else len(path)
    return labels[k:] + labels[:k]


def search_ham(
    g: CayleyGraph | QuotientMultigraph,
    c: SearchConstraint | None = None,
    callbacks: SearchCallbacks | None = None,
) -> list[Label] | None:
    """A hamiltonian cycle (or path) of a Cayley graph or quotient multigraph."""
    c = c or SearchConstraint()
    sg = _undirected(g, c)
    if not _connected(sg):
        return None
    return _run(sg, c, callbacks)


def search_directed_ham(
    g: CayleyGraph,
    c: SearchConstraint | None = None,
    callbacks: SearchCallbacks | None = None,
) -> list[Label] | None:
    """A directed hamiltonian cycle using only the arcs v → vs, s ∈ S."""
    c = c or SearchConstraint()
    sg = _directed(g, c)
    if not _connected(sg):
        return None
    return _run(sg, c, callbacks)


def _connected(sg: _StepGraph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in sg.nbrs[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == sg.n
