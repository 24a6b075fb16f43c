# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Dense finite groups: multiplication tables, words and homomorphisms.

Elements are indices ``0..order-1`` with ``0`` the identity. Products are read
left to right, so a word ``s1 s2 ... sm`` evaluates to ``s1·s2·…·sm`` and
permutations compose by applying the left factor first.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..exceptions import HamCayleyError, UnboundNameError

logger = logging.getLogger("hamcayley.engine.group")

Element = int

# Exhaustive associativity up to this order, sampled above it
EXHAUSTIVE_CHECK_ORDER = 64
SAMPLED_TRIPLES = 1_000_000


# ── Labels and words ──────────────────────────────────────────────────────


@dataclass(frozen=True)
class Label:
    """A signed generator reference.

    ``factors`` is empty for a plain name. A compound label such as ``y^2w``
    carries its factors as ``(name, exponent)`` pairs and stands for one
    element, the product of those powers.
    """

    name: str
    sign: int = 1
    factors: tuple[tuple[str, int], ...] = ()

    def inverse(self) -> Label:
        return Label(self.name, -self.sign, self.factors)

    @property
    def text(self) -> str:
        if self.sign == 1:
            return self.name
        if not self.factors and self.name.startswith("("):
            return f"{self.name}^-1"
        if self.factors or not self.name.isidentifier():
            return f"({self.name})^-1"
        return f"{self.name}^-1"

    def __str__(self) -> str:
        return self.text


Word = tuple[Label, ...]


def render_power(name: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return name
    return f"{name}^{k}"


# ── GroupTable ────────────────────────────────────────────────────────────


@dataclass(frozen=True, eq=False)
class GroupTable:
    """An immutable finite group given by its multiplication table."""

    name: str
    table: np.ndarray
    inverse: np.ndarray
    gen_names: dict[str, Element]
    element_names: tuple[str, ...]
    aliases: dict[str, Element] = field(default_factory=dict)

    @classmethod
    def from_table(
        cls,
        name: str,
        table: np.ndarray,
        gen_names: dict[str, Element],
        element_names: Sequence[str] | None = None,
        aliases: dict[str, Element] | None = None,
    ) -> GroupTable:
        table = np.ascontiguousarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n):
            raise HamCayleyError(f"{name}: multiplication table must be square")
        if not (np.array_equal(table[0], np.arange(n)) and np.array_equal(table[:, 0], np.arange(n))):
            raise HamCayleyError(f"{name}: element 0 is not a two-sided identity")
        rows, cols = np.nonzero(table == 0)
        if len(rows) != n:
            raise HamCayleyError(f"{name}: some element has no inverse")
        inverse = np.empty(n, dtype=np.int32)
        inverse[rows] = cols
        for g, idx in gen_names.items():
            if not 0 <= idx < n:
                raise HamCayleyError(f"{name}: generator {g} maps outside the group")
        table.setflags(write=False)
        inverse.setflags(write=False)
        names = tuple(element_names) if element_names is not None else tuple(str(i) for i in range(n))
        return cls(name, table, inverse, dict(gen_names), names, dict(aliases or {}))

    # -- basic arithmetic --------------------------------------------------

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @cached_property
    def rows(self) -> list[list[int]]:
        """Table as nested lists; list indexing beats numpy scalars in hot loops."""
        return self.table.tolist()

    @cached_property
    def inv(self) -> list[int]:
        return self.inverse.tolist()

    def mul(self, a: Element, b: Element) -> Element:
        return self.rows[a][b]

    def product(self, elements: Iterable[Element]) -> Element:
        rows = self.rows
        acc = 0
        for g in elements:
            acc = rows[acc][g]
        return acc

    def power(self, g: Element, k: int) -> Element:
        if k < 0:
            g, k = self.inv[g], -k
        rows = self.rows
        acc, base = 0, g
        while k:
            if k & 1:
                acc = rows[acc][base]
            base = rows[base][base]
            k >>= 1
        return acc

    # -- names -------------------------------------------------------------

    @cached_property
    def _name_index(self) -> dict[str, Element]:
        index = {name: i for i, name in enumerate(self.element_names)}
        index.update(self.aliases)
        index.update(self.gen_names)
        return index

    def lookup(self, name: str) -> Element:
        try:
            return self._name_index[name]
        except KeyError:
            raise UnboundNameError(f"'{name}' is not bound in {self.name}")

    def has_name(self, name: str) -> bool:
        return name in self._name_index

    def element_name(self, g: Element) -> str:
        return self.element_names[g]

    # -- checks ------------------------------------------------------------

    def is_associative(self, samples: int = SAMPLED_TRIPLES, seed: int = 0) -> bool:
        """Exhaustive for small orders, seeded random triples otherwise."""
        t = self.table
        n = self.order
        if n <= EXHAUSTIVE_CHECK_ORDER:
            return bool(np.array_equal(t[t], t[:, t]))
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        return bool(np.array_equal(t[t[a, b], c], t[a, t[b, c]]))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self) -> str:
        return f"GroupTable({self.name!r}, order={self.order})"


# ── Word evaluation ───────────────────────────────────────────────────────


def resolve_label(
    G: GroupTable, label: Label, genset: dict[str, Element] | None = None
) -> Element:
    """Element denoted by a label; generating-set names shadow group names."""
    if label.factors and not (genset and label.name in genset):
        value = G.product(
            G.power(_resolve_name(G, name, genset), k) for name, k in label.factors
        )
    else:
        value = _resolve_name(G, label.name, genset)
    return value if label.sign == 1 else G.inv[value]


def _resolve_name(G: GroupTable, name: str, genset: dict[str, Element] | None) -> Element:
    if genset and name in genset:
        return genset[name]
    return G.lookup(name)


def evaluate(G: GroupTable, word: Iterable[Label], genset: dict[str, Element] | None = None) -> Element:
    """Left-to-right product of the letters; the empty word is the identity."""
    return G.product(resolve_label(G, label, genset) for label in word)


def order_of(G: GroupTable, g: Element) -> int:
    rows = G.rows
    n, acc = 1, g
    while acc != 0:
        acc = rows[acc][g]
        n += 1
    return n


def element_orders(G: GroupTable) -> list[int]:
    return [order_of(G, g) for g in range(G.order)]


def conjugate(G: GroupTable, b: Element, a: Element) -> Element:
    """b^a = a⁻¹ b a."""
    return G.product((G.inv[a], b, a))


def commutator(G: GroupTable, a: Element, b: Element) -> Element:
    """[a,b] = a⁻¹ b⁻¹ a b."""
    return G.product((G.inv[a], G.inv[b], a, b))


# ── Homomorphisms ─────────────────────────────────────────────────────────


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: GroupTable
    target: GroupTable
    image: tuple[int, ...]

    def __call__(self, g: Element) -> Element:
        return self.image[g]

    def is_homomorphism(self) -> bool:
        img = np.asarray(self.image)
        src = self.source.table
        return bool(np.array_equal(img[src], self.target.table[img[:, None], img[None, :]]))

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.image)) == self.source.order

    def compose(self, other: Homomorphism) -> Homomorphism:
        """``self`` after ``other``: g ↦ self(other(g))."""
        return Homomorphism(other.source, self.target, tuple(self.image[i] for i in other.image))

    def inverse_map(self) -> Homomorphism:
        inv = [0] * self.source.order
        for g, h in enumerate(self.image):
            inv[h] = g
        return Homomorphism(self.target, self.source, tuple(inv))

    def kernel(self) -> list[Element]:
        return [g for g, h in enumerate(self.image) if h == 0]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Homomorphism) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)


def identity_map(G: GroupTable) -> Homomorphism:
    return Homomorphism(G, G, tuple(range(G.order)))
