# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Minimal generating sets and their classification up to automorphisms."""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..exceptions import DisconnectedGensetError, IdentityInGensetError
from .assemble import CYCLES_RE, resolve_element
from .callbacks import SearchCallbacks
from .catalog import listed_gensets
from .group import Element, GroupTable
from .morphisms import automorphisms
from .schemas import GensetReport, ListedMatch
from .subgroups import generates, subgroup_closure

logger = logging.getLogger("hamcayley.engine.gensets")

DEFAULT_MAX_SIZE = 4


@dataclass(frozen=True)
class GenSet:
    elements: tuple[Element, ...]
    minimal: bool = True

    @property
    def size(self) -> int:
        return len(self.elements)

    def names(self, G: GroupTable) -> list[str]:
        return [G.element_name(g) for g in self.elements]

    def as_genset(self, G: GroupTable) -> dict[str, Element]:
        return {G.element_name(g): g for g in self.elements}


def is_minimal(G: GroupTable, elements: Sequence[Element]) -> bool:
    elements = list(elements)
    if not generates(G, elements):
        return False
    return all(not generates(G, elements[:i] + elements[i + 1:]) for i in range(len(elements)))


def _independent(G: GroupTable, chosen: list[Element]) -> bool:
    """No member lies in the subgroup generated by the others."""
    for i, x in enumerate(chosen):
        if x in subgroup_closure(G, chosen[:i] + chosen[i + 1:]):
            return False
    return True


# ── Enumeration ───────────────────────────────────────────────────────────


def _grow_from(G: GroupTable, first: Element, max_size: int) -> list[GenSet]:
    n = G.order
    out: list[GenSet] = []

    def grow(chosen: list[Element]) -> None:
        closure = subgroup_closure(G, chosen)
        if closure.is_whole():
            out.append(GenSet(tuple(chosen), True))
            return
        if len(chosen) == max_size:
            return
        for x in range(chosen[-1] + 1, n):
            if x in closure:
                continue
            extended = chosen + [x]
            if _independent(G, extended):
                grow(extended)

    grow([first])
    return out


def minimal_gensets(
    G: GroupTable,
    max_size: int = DEFAULT_MAX_SIZE,
    first: Iterable[Element] | None = None,
    callbacks: SearchCallbacks | None = None,
) -> list[GenSet]:
    """All minimal generating sets of size ≤ max_size, as sorted index tuples.

    Sets grow in increasing index order; an extension is dropped as soon as the
    new element is already generated or makes an earlier member redundant.
    ``first`` restricts the smallest member of each set.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    if G.order == 1:
        return [GenSet((), True)]
    starts = list(first) if first is not None else list(range(1, G.order))
    workers = callbacks.max_workers if callbacks else 0
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda x: _grow_from(G, x, max_size), starts))
    else:
        parts = [_grow_from(G, x, max_size) for x in starts]
    found = sorted((s for part in parts for s in part), key=lambda s: (s.size, s.elements))
    logger.debug(f"{G.name}: {len(found)} minimal generating sets of size ≤ {max_size}")
    return found


# ── Orbits under automorphisms ────────────────────────────────────────────


def _images(G: GroupTable, auts: Sequence | None) -> np.ndarray:
    auts = auts if auts is not None else automorphisms(G)
    return np.array([phi.image for phi in auts], dtype=np.int32)


def canonical_form(
    images: np.ndarray, elements: Sequence[Element], inverse: np.ndarray | None = None
) -> tuple[int, ...]:
    """Lexicographically least sorted image of a set over all automorphisms.

    With ``inverse``, each member may also be replaced by its inverse; taking
    the smaller of the two per member gives the least sorted tuple.
    """
    rows = images[:, list(elements)]
    if inverse is not None:
        rows = np.minimum(rows, inverse[rows])
    rows = np.sort(rows, axis=1)
    best = np.lexsort(rows.T[::-1])[0]
    return tuple(int(v) for v in rows[best])


def orbit_partition(
    G: GroupTable,
    gensets: Sequence[GenSet],
    with_inversion: bool = False,
    auts: Sequence | None = None,
) -> dict[tuple[int, ...], list[GenSet]]:
    images = _images(G, auts)
    inverse = G.inverse if with_inversion else None
    orbits: dict[tuple[int, ...], list[GenSet]] = {}
    for s in gensets:
        orbits.setdefault(canonical_form(images, s.elements, inverse), []).append(s)
    return dict(sorted(orbits.items(), key=lambda kv: (len(kv[0]), kv[0])))


def up_to_aut(
    G: GroupTable,
    gensets: Sequence[GenSet],
    with_inversion: bool = False,
    auts: Sequence | None = None,
) -> list[GenSet]:
    """One representative per orbit: the canonical (lexicographically least) member."""
    orbits = orbit_partition(G, gensets, with_inversion, auts)
    return [GenSet(key, True) for key in orbits]


def representative_gensets(
    G: GroupTable, max_size: int = DEFAULT_MAX_SIZE, callbacks: SearchCallbacks | None = None
) -> list[GenSet]:
    """Orbit representatives without enumerating every set.

    The canonical member of an orbit starts with an element that is least in
    its own automorphism orbit, so only those elements need to start a set.
    """
    auts = automorphisms(G)
    images = _images(G, auts)
    first = [x for x in range(1, G.order) if int(images[:, x].min()) == x]
    found = minimal_gensets(G, max_size, first=first, callbacks=callbacks)
    return up_to_aut(G, found, auts=auts)


# ── Generating sets from text ─────────────────────────────────────────────


def split_words(text: str) -> list[str]:
    """Split on commas outside parentheses, so cycle notation survives."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    parts.append("".join(current).strip())
    return [p for p in parts if p]


def _genset_name(word: str) -> str:
    if CYCLES_RE.match(word):
        return re.sub(r"\s+", "", word)
    return re.sub(r"\s+", " ", word.strip())


def parse_genset(
    G: GroupTable,
    words: str | Iterable[str] | Mapping[str, str],
    params: Mapping[str, int] | None = None,
    require_generating: bool = True,
) -> dict[str, Element]:
    """Name → element for a generating set written as words or permutations."""
    if isinstance(words, str):
        words = split_words(words)
    if isinstance(words, Mapping):
        pairs = [(name, word) for name, word in words.items()]
    else:
        pairs = [(_genset_name(w), w) for w in words]
    genset = {name: resolve_element(G, word, params) for name, word in pairs}
    if 0 in genset.values():
        raise IdentityInGensetError("the identity cannot belong to a generating set")
    if require_generating and not generates(G, genset.values()):
        raise DisconnectedGensetError(f"{', '.join(genset)} does not generate {G.name}")
    return genset


# ── Report ────────────────────────────────────────────────────────────────


def genset_report(
    G: GroupTable,
    max_size: int = DEFAULT_MAX_SIZE,
    key: str | None = None,
    callbacks: SearchCallbacks | None = None,
) -> GensetReport:
    auts = automorphisms(G)
    found = minimal_gensets(G, max_size, callbacks=callbacks)
    plain = orbit_partition(G, found, auts=auts)
    inverted = orbit_partition(G, found, with_inversion=True, auts=auts)

    def per_size(items: Iterable[tuple]) -> dict[int, int]:
        out: dict[int, int] = {}
        for t in items:
            out[len(t)] = out.get(len(t), 0) + 1
        return dict(sorted(out.items()))

    report = GensetReport(
        group=G.name,
        order=G.order,
        aut_order=len(auts),
        max_size=max_size,
        counts=per_size(s.elements for s in found),
        orbits=per_size(plain),
        orbits_with_inversion=per_size(inverted),
        representatives=[[G.element_name(g) for g in key_] for key_ in plain],
    )

    listed = listed_gensets(key or G.name)
    if listed is not None:
        images = _images(G, auts)
        plain_index = {k: i for i, k in enumerate(plain)}
        inverted_index = {k: i for i, k in enumerate(inverted)}
        report.listed = []
        for words in listed:
            elements = sorted(parse_genset(G, words, require_generating=False).values())
            minimal = is_minimal(G, elements)
            match = ListedMatch(words=list(words), minimal=minimal)
            if minimal and len(elements) <= max_size:
                match.orbit = plain_index.get(canonical_form(images, elements))
                match.orbit_with_inversion = inverted_index.get(
                    canonical_form(images, elements, G.inverse)
                )
            report.listed.append(match)
    return report
