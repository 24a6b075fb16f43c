# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Declarative group specs and their assembly into multiplication tables.

A spec is a small record with a ``kind`` discriminator. Integer fields accept
literals or expressions over parameters (``"p-1"``), so one spec describes a
whole family. Semidirect elements are stored normal-part first: the element
``n·q`` is printed as the name of ``n`` followed by the name of ``q``.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from collections.abc import Mapping, Sequence
from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError
from sympy.combinatorics import Permutation

from ..config import MAX_ORDER
from ..exceptions import (
    DimensionMismatchError,
    HamCayleyError,
    InvalidActionError,
    OrderOverflowError,
    UnboundNameError,
    UnknownGroupError,
)
from .group import Element, GroupTable, evaluate, render_power
from .linear import ActionMatrix
from .morphisms import extend_homomorphism
from .subgroups import quotient, subgroup_closure
from .walk import NAME_RE, eval_int, parse_word

logger = logging.getLogger("hamcayley.engine.assemble")

IntField = Union[int, str]

# ── Spec models ───────────────────────────────────────────────────────────


class _SpecBase(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: str | None = None
    names: dict[str, str] = Field(default_factory=dict, description="Extra names: alias -> word")


class CyclicSpec(_SpecBase):
    kind: Literal["cyclic"] = "cyclic"
    generator: str = "x"
    order: IntField


class Factor(BaseModel):
    name: str
    order: IntField


class AbelianSpec(_SpecBase):
    kind: Literal["abelian"] = "abelian"
    factors: list[Factor]


class PermSpec(_SpecBase):
    kind: Literal["perm"] = "perm"
    degree: int
    generators: dict[str, str]


class MetacyclicSpec(_SpecBase):
    """⟨x, y | x^m, y^n = x^t, y⁻¹xy = x^r⟩ with elements x^b·y^a."""

    kind: Literal["metacyclic"] = "metacyclic"
    x: str = "x"
    y: str = "y"
    m: IntField
    n: IntField
    t: IntField = 0
    r: IntField


class SemidirectSpec(_SpecBase):
    """normal ⋊ acting; each acting generator g maps normal generators n to n^g = g⁻¹ng.

    The action is given by exactly one of ``action`` (words in the normal factor),
    ``matrix`` (rows over F2 on the normal factor's generators) or ``conjugate``
    (a permutation conjugating a permutation normal factor).
    """

    kind: Literal["semidirect"] = "semidirect"
    normal: GroupSpec
    acting: GroupSpec
    action: dict[str, dict[str, str]] = Field(default_factory=dict)
    matrix: dict[str, list[list[int]]] = Field(default_factory=dict)
    conjugate: dict[str, str] = Field(default_factory=dict)


class DirectSpec(_SpecBase):
    kind: Literal["direct"] = "direct"
    factors: list[GroupSpec]


class QuotientSpec(_SpecBase):
    kind: Literal["quotient"] = "quotient"
    base: GroupSpec
    kernel: list[str]


class RefSpec(_SpecBase):
    """A catalog entry by key."""

    kind: Literal["ref"] = "ref"
    key: str
    params: dict[str, IntField] = Field(default_factory=dict)


GroupSpec = Annotated[
    Union[
        CyclicSpec,
        AbelianSpec,
        PermSpec,
        MetacyclicSpec,
        SemidirectSpec,
        DirectSpec,
        QuotientSpec,
        RefSpec,
    ],
    Field(discriminator="kind"),
]

SemidirectSpec.model_rebuild()
DirectSpec.model_rebuild()
QuotientSpec.model_rebuild()


class _SpecHolder(BaseModel):
    spec: GroupSpec


def parse_group_spec(data: Mapping) -> GroupSpec:
    """Validate a plain mapping (from YAML or JSON) as a group spec."""
    try:
        return _SpecHolder.model_validate({"spec": data}).spec
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(x) for x in first["loc"][1:]) or "spec"
        raise UnknownGroupError(f"invalid group spec at {where}: {first['msg']}")


# ── Element resolution ────────────────────────────────────────────────────

CYCLES_RE = re.compile(r"^\s*(\(\s*\d+(\s*,\s*\d+)*\s*\)\s*)+$")


def perm_from_cycles(text: str, degree: int | None = None) -> Permutation:
    """1-based cycle notation such as ``(1,2,3)(5,6)``."""
    cycles = [
        [int(v) - 1 for v in body.split(",")] for body in re.findall(r"\(([^()]*)\)", text)
    ]
    size = max([degree or 0] + [max(c) + 1 for c in cycles if c])
    perm = Permutation(list(range(size)))
    for cycle in cycles:
        if len(cycle) > 1:
            perm = perm * Permutation([cycle], size=size)
    return perm


def perm_name(perm: Permutation) -> str:
    cycles = perm.cyclic_form
    if not cycles:
        return "(1)"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles)


def resolve_element(G: GroupTable, text: str, params: Mapping[str, int] | None = None,
                    genset: Mapping[str, Element] | None = None) -> Element:
    """An element from a word (``x^2 v``) or, in permutation groups, cycle notation."""
    if CYCLES_RE.match(text):
        return G.lookup(perm_name(perm_from_cycles(text)))
    return evaluate(G, parse_word(text, params), dict(genset) if genset else None)


# ── Assembly ──────────────────────────────────────────────────────────────


def assemble_group(spec: GroupSpec | Mapping, params: Mapping[str, int] | None = None) -> GroupTable:
    """Build the multiplication table a spec describes."""
    if isinstance(spec, Mapping):
        spec = parse_group_spec(spec)
    params = dict(params or {})
    builder = _BUILDERS[spec.kind]
    G = builder(spec, params)
    if spec.names:
        aliases = dict(G.aliases)
        for alias, word in spec.names.items():
            aliases[alias] = resolve_element(G, word, params)
        G = GroupTable.from_table(G.name, G.table, G.gen_names, G.element_names, aliases)
    if spec.label:
        G = GroupTable.from_table(spec.label, G.table, G.gen_names, G.element_names, G.aliases)
    return G


def _guard(order: int, what: str) -> None:
    if order > MAX_ORDER:
        raise OrderOverflowError(
            f"{what} would have order {order}, above the limit of {MAX_ORDER}", order, MAX_ORDER
        )


def _join_name(*parts: str) -> str:
    text = " ".join(p for p in parts if p != "e")
    return text or "e"


def _compact_aliases(names: Sequence[str], taken: Mapping[str, Element] | None = None) -> dict[str, Element]:
    """``xw`` for ``x w``, when the glued form still reads as one name."""
    aliases: dict[str, Element] = {}
    known = set(names) | set(taken or {})
    for g, nm in enumerate(names):
        glued = nm.replace(" ", "")
        if glued != nm and NAME_RE.fullmatch(glued) and glued not in known:
            aliases.setdefault(glued, g)
    return aliases


def _build_cyclic(spec: CyclicSpec, params: dict) -> GroupTable:
    n = eval_int(spec.order, params)
    if n < 1:
        raise HamCayleyError(f"cyclic order must be positive, got {n}")
    _guard(n, "cyclic group")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    names = ["e"] + [render_power(spec.generator, k) for k in range(1, n)]
    gens = {spec.generator: 1 % n} if n > 1 else {}
    return GroupTable.from_table(f"Z{n}", table, gens, names)


def _build_abelian(spec: AbelianSpec, params: dict) -> GroupTable:
    orders = [eval_int(f.order, params) for f in spec.factors]
    total = int(np.prod(orders)) if orders else 1
    _guard(total, "abelian group")
    # mixed radix, first factor fastest
    strides = np.cumprod([1] + orders[:-1])
    coords = (np.arange(total)[:, None] // strides[None, :]) % np.asarray(orders)[None, :]
    summed = (coords[:, None, :] + coords[None, :, :]) % np.asarray(orders)
    table = (summed * strides).sum(axis=2)
    names = [
        _join_name(*(render_power(f.name, int(k)) or "e" for f, k in zip(spec.factors, row)))
        for row in coords
    ]
    gens = {f.name: int(s) for f, s, o in zip(spec.factors, strides, orders) if o > 1}
    label = "x".join(f"Z{o}" for o in orders) or "1"
    return GroupTable.from_table(label, table, gens, names, _compact_aliases(names, gens))


def _build_perm(spec: PermSpec, params: dict) -> GroupTable:
    gens = {name: perm_from_cycles(text, spec.degree) for name, text in spec.generators.items()}
    identity = Permutation(list(range(spec.degree)))
    elements = [identity]
    index = {tuple(identity.array_form): 0}
    queue = deque([identity])
    while queue:
        p = queue.popleft()
        for g in gens.values():
            q = p * g
            key = tuple(q.array_form)
            if key not in index:
                index[key] = len(elements)
                elements.append(q)
                queue.append(q)
                _guard(len(elements), "permutation group")
    arrays = np.array([p.array_form for p in elements], dtype=np.int64)
    table = np.empty((len(elements), len(elements)), dtype=np.int32)
    for i, row in enumerate(arrays):
        # left factor applied first: (i·j)(k) = j(i(k))
        composed = arrays[:, row]
        table[i] = [index[tuple(c)] for c in composed.tolist()]
    gen_idx = {name: index[tuple(p.array_form)] for name, p in gens.items()}
    names = [perm_name(p) for p in elements]
    return GroupTable.from_table(f"Perm{spec.degree}[{len(elements)}]", table, gen_idx, names)


def _build_metacyclic(spec: MetacyclicSpec, params: dict) -> GroupTable:
    m, n = eval_int(spec.m, params), eval_int(spec.n, params)
    t, r = eval_int(spec.t, params) % m, eval_int(spec.r, params) % m
    _guard(m * n, "metacyclic group")
    if pow(r, n, m) != 1 % m or (t * r - t) % m != 0:
        raise InvalidActionError(f"metacyclic data m={m}, n={n}, t={t}, r={r} is inconsistent")
    r_inv = pow(r, -1, m)
    total = m * n
    table = np.empty((total, total), dtype=np.int32)
    # element x^b y^a has index a*m + b
    for i in range(total):
        a, b = divmod(i, m)
        twist = pow(r_inv, a, m)
        for j in range(total):
            c, d = divmod(j, m)
            e = b + d * twist
            s = a + c
            if s >= n:
                s -= n
                e += t
            table[i, j] = s * m + e % m
    names = [
        _join_name(render_power(spec.x, i % m) or "e", render_power(spec.y, i // m) or "e")
        for i in range(total)
    ]
    gens = {spec.x: 1 % total, spec.y: m % total}
    G = GroupTable.from_table(f"Meta({m},{n},{t},{r})", table, gens, names, _compact_aliases(names, gens))
    if not G.is_associative():
        raise InvalidActionError(f"metacyclic data m={m}, n={n}, t={t}, r={r} is not a group")
    return G


def _action_images(spec: SemidirectSpec, N: GroupTable, gname: str, params: dict) -> dict[Element, Element]:
    """Images of the normal factor's generators under the acting generator ``gname``."""
    if gname in spec.conjugate:
        pi = perm_from_cycles(spec.conjugate[gname])
        images = {}
        for n_idx in N.gen_names.values():
            n_perm = perm_from_cycles(N.element_names[n_idx])
            size = max(pi.size, n_perm.size)
            pi_s = Permutation(pi.array_form + list(range(pi.size, size)))
            n_s = Permutation(n_perm.array_form + list(range(n_perm.size, size)))
            try:
                images[n_idx] = N.lookup(perm_name(~pi_s * n_s * pi_s))
            except UnboundNameError:
                raise InvalidActionError(f"conjugation by {gname} does not preserve the normal factor")
        return images
    if gname in spec.matrix:
        basis = list(N.gen_names.values())
        M = ActionMatrix.from_rows(spec.matrix[gname])
        if M.entries.shape != (len(basis), len(basis)):
            raise DimensionMismatchError(
                f"action matrix for {gname} is {M.entries.shape}, normal factor has {len(basis)} generators"
            )
        if not M.is_invertible():
            raise InvalidActionError(f"action matrix for {gname} is singular")
        return {
            b: N.product(basis[j] for j in range(len(basis)) if M.entries[i, j])
            for i, b in enumerate(basis)
        }
    words = spec.action.get(gname, {})
    unknown = set(words) - set(N.gen_names)
    if unknown:
        raise InvalidActionError(f"action of {gname} names non-generators {sorted(unknown)}")
    return {
        n_idx: resolve_element(N, words[n_name], params) if n_name in words else n_idx
        for n_name, n_idx in N.gen_names.items()
    }


def _semidirect_table(N: GroupTable, Q: GroupTable, act: np.ndarray) -> np.ndarray:
    """(n1,q1)(n2,q2) = (n1 · act[q1⁻¹](n2), q1 q2), index q*|N| + n."""
    nN, total = N.order, N.order * Q.order
    idx = np.arange(total)
    ni, qi = idx % nN, idx // nN
    twisted = act[Q.inverse[qi][:, None], ni[None, :]]
    new_n = N.table[ni[:, None], twisted]
    new_q = Q.table[qi[:, None], qi[None, :]]
    return new_q * nN + new_n


def _pair_group(name: str, N: GroupTable, Q: GroupTable, act: np.ndarray) -> GroupTable:
    nN = N.order
    table = _semidirect_table(N, Q, act)
    names = [
        _join_name(N.element_names[i % nN], Q.element_names[i // nN]) for i in range(nN * Q.order)
    ]
    gens = {nm: g for nm, g in N.gen_names.items()}
    gens.update({nm: q * nN for nm, q in Q.gen_names.items()})
    aliases = {nm: g for nm, g in N.aliases.items()}
    aliases.update({nm: q * nN for nm, q in Q.aliases.items()})
    for g, nm in enumerate(N.element_names):
        aliases.setdefault(nm, g)
    for q, nm in enumerate(Q.element_names):
        aliases.setdefault(nm, q * nN)
    for nm, g in _compact_aliases(names, {**gens, **aliases}).items():
        aliases.setdefault(nm, g)
    return GroupTable.from_table(name, table, gens, names, aliases)


def _build_semidirect(spec: SemidirectSpec, params: dict) -> GroupTable:
    N = assemble_group(spec.normal, params)
    Q = assemble_group(spec.acting, params)
    _guard(N.order * Q.order, "semidirect product")
    forms = [f for f in (spec.action, spec.matrix, spec.conjugate) if f]
    if len(forms) > 1:
        raise InvalidActionError("give the action as words, a matrix or a conjugating permutation, not several")
    unknown = set().union(*(f.keys() for f in forms)) - set(Q.gen_names) if forms else set()
    if unknown:
        raise InvalidActionError(f"action given for non-generators {sorted(unknown)}")

    gen_auts: dict[Element, list[int]] = {}
    for gname, g in Q.gen_names.items():
        phi = extend_homomorphism(N, N, _action_images(spec, N, gname, params))
        if phi is None or not phi.is_bijective():
            raise InvalidActionError(f"action of {gname} is not an automorphism of the normal factor")
        gen_auts[g] = list(phi.image)

    # n^{qg} = (n^q)^g, checked on every edge of the acting group's Cayley graph
    act: list[list[int] | None] = [None] * Q.order
    act[0] = list(range(N.order))
    queue = deque([0])
    while queue:
        q = queue.popleft()
        for g, aut in gen_auts.items():
            qg = Q.mul(q, g)
            composed = [aut[v] for v in act[q]]
            if act[qg] is None:
                act[qg] = composed
                queue.append(qg)
            elif act[qg] != composed:
                raise InvalidActionError(
                    f"action is not a homomorphism: conflict at {Q.element_names[qg]}"
                )
    if any(a is None for a in act):
        raise InvalidActionError("acting generators do not generate the acting group")
    return _pair_group(f"{N.name}:{Q.name}", N, Q, np.asarray(act, dtype=np.int64))


def _build_direct(spec: DirectSpec, params: dict) -> GroupTable:
    if not spec.factors:
        raise HamCayleyError("a direct product needs at least one factor")
    G = assemble_group(spec.factors[0], params)
    for factor in spec.factors[1:]:
        H = assemble_group(factor, params)
        _guard(G.order * H.order, "direct product")
        trivial = np.tile(np.arange(G.order), (H.order, 1))
        G = _pair_group(f"{G.name}x{H.name}", G, H, trivial)
    return G


def _build_quotient(spec: QuotientSpec, params: dict) -> GroupTable:
    base = assemble_group(spec.base, params)
    kernel = subgroup_closure(base, (resolve_element(base, w, params) for w in spec.kernel))
    Q, _ = quotient(base, kernel, name=f"{base.name}/N{kernel.order}")
    return Q


def _build_ref(spec: RefSpec, params: dict) -> GroupTable:
    from .catalog import catalog_spec

    merged = dict(params)
    merged.update({k: eval_int(v, params) for k, v in spec.params.items()})
    return assemble_group(catalog_spec(spec.key), merged)


_BUILDERS = {
    "cyclic": _build_cyclic,
    "abelian": _build_abelian,
    "perm": _build_perm,
    "metacyclic": _build_metacyclic,
    "semidirect": _build_semidirect,
    "direct": _build_direct,
    "quotient": _build_quotient,
    "ref": _build_ref,
}
