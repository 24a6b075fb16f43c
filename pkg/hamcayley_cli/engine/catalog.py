# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Group catalog: the shipped manifest and the enumeration of groups of order 16p.

The manifest (``templates/catalog.yaml``) lists every named construction. Groups
Q ⋉ Z_p are not listed; they are generated from the 14 groups of order 16 and the
homomorphisms Q → Aut(Z_p), then deduplicated up to isomorphism.
"""

from __future__ import annotations

import logging
from enum import Enum
from functools import cache
from itertools import product
from pathlib import Path

import sympy
import yaml
from pydantic import BaseModel, ConfigDict, Field

from ..config import CATALOG_FILE
from ..exceptions import PrimeRequiredError, UnknownGroupError
from .assemble import (
    CyclicSpec,
    GroupSpec,
    RefSpec,
    SemidirectSpec,
    assemble_group,
    parse_group_spec,
)
from .group import GroupTable, order_of
from .linear import ActionMatrix, companion, companion_action_check
from .morphisms import extend_homomorphism, fingerprint, isomorphic
from .schemas import GroupSummary
from .subgroups import center, derived_subgroup, sylow

logger = logging.getLogger("hamcayley.engine.catalog")

MAX_ENUMERATED_PRIME = 31
EXCEPTIONAL_FAMILY = {3: "exceptional48", 5: "exceptional80", 7: "exceptional112"}

__all__ = [
    "ActionMatrix",
    "CatalogFamily",
    "CatalogId",
    "build",
    "build_exceptional",
    "build_order16",
    "catalog_entries",
    "catalog_spec",
    "companion",
    "companion_action_check",
    "enumerate_16p",
    "list_groups",
    "listed_gensets",
    "summarize",
]


class CatalogFamily(str, Enum):
    Order16 = "order16"
    Exceptional48 = "exceptional48"
    Exceptional80 = "exceptional80"
    Exceptional112 = "exceptional112"
    Semidirect16p = "semidirect16p"
    Auxiliary = "auxiliary"


class CatalogId(BaseModel):
    """Stable reference to a catalog construction."""

    model_config = ConfigDict(frozen=True)

    family: CatalogFamily
    key: str
    parameters: dict[str, int] = Field(default_factory=dict)


class CatalogEntry(BaseModel):
    key: str
    family: CatalogFamily
    description: str = ""
    spec: dict
    listed_gensets: list[list[str]] | None = None


# ── Manifest ──────────────────────────────────────────────────────────────


@cache
def _load_manifest(path: Path = CATALOG_FILE) -> dict[str, CatalogEntry]:
    with open(path) as f:
        data = yaml.safe_load(f) or {}
    entries = [CatalogEntry.model_validate(item) for item in data.get("groups", [])]
    logger.debug(f"loaded {len(entries)} catalog entries from {path}")
    return {e.key: e for e in entries}


def catalog_entries(family: CatalogFamily | str | None = None) -> list[CatalogEntry]:
    entries = list(_load_manifest().values())
    if family is not None:
        entries = [e for e in entries if e.family == CatalogFamily(family)]
    return entries


def catalog_spec(key: str) -> GroupSpec:
    try:
        entry = _load_manifest()[key]
    except KeyError:
        raise UnknownGroupError(f"no catalog entry '{key}'")
    return parse_group_spec({**entry.spec, "label": entry.spec.get("label", key)})


def listed_gensets(key: str) -> list[list[str]] | None:
    """Generating sets the manifest records for a group, as words; None when not recorded."""
    entry = _load_manifest().get(key)
    return None if entry is None else entry.listed_gensets


def catalog_id(key: str) -> CatalogId:
    entry = _load_manifest().get(key)
    if entry is None:
        raise UnknownGroupError(f"no catalog entry '{key}'")
    return CatalogId(family=entry.family, key=key)


# ── Builders ──────────────────────────────────────────────────────────────


@cache
def _build_cached(key: str, parameters: tuple[tuple[str, int], ...]) -> GroupTable:
    params = dict(parameters)
    if key in _load_manifest():
        return assemble_group(catalog_spec(key), params)
    if "p" in params and ":" in key:
        return assemble_group(_semidirect_16p_spec(key, params), params)
    raise UnknownGroupError(f"no catalog entry '{key}'")


def build(cid: CatalogId | str) -> GroupTable:
    """Any catalog group; rebuilding the same id returns the same table."""
    if isinstance(cid, str):
        cid = catalog_id(cid)
    return _build_cached(cid.key, tuple(sorted(cid.parameters.items())))


def build_order16(cid: CatalogId | str) -> GroupTable:
    if isinstance(cid, str):
        cid = catalog_id(cid)
    if cid.family != CatalogFamily.Order16:
        raise UnknownGroupError(f"'{cid.key}' is not a group of order 16")
    return build(cid)


def build_exceptional(cid: CatalogId | str) -> GroupTable:
    if isinstance(cid, str):
        cid = catalog_id(cid)
    if cid.family not in (
        CatalogFamily.Exceptional48,
        CatalogFamily.Exceptional80,
        CatalogFamily.Exceptional112,
    ):
        raise UnknownGroupError(f"'{cid.key}' is not an exceptional group of order 48, 80 or 112")
    return build(cid)


# ── Q ⋉ Z_p ───────────────────────────────────────────────────────────────


def _semidirect_16p_spec(key: str, params: dict[str, int]) -> SemidirectSpec:
    """``{16p}.{Q key}:Z{p}`` with a unit ``u_<gen>`` per generator of Q."""
    q_key = key.split(".", 1)[1].rsplit(":Z", 1)[0]
    p = params["p"]
    Q = build(q_key)
    action = {gen: {"w": f"w^{params.get('u_' + gen, 1)}"} for gen in Q.gen_names}
    return SemidirectSpec(
        normal=CyclicSpec(generator="w", order=p),
        acting=RefSpec(key=q_key),
        action=action,
        label=_label_16p(q_key, p, {g: params.get("u_" + g, 1) for g in Q.gen_names}),
    )


def _label_16p(q_key: str, p: int, units: dict[str, int]) -> str:
    acting = ",".join(f"{g}->{u}" for g, u in units.items() if u != 1) or "trivial"
    return f"{16 * p}.{q_key.split('.', 1)[1]}:Z{p}[{acting}]"


def _unit_homomorphisms(Q: GroupTable, p: int) -> list[dict[str, int]]:
    """Every homomorphism Q → Z_p^×, as a unit per generator of Q."""
    root = sympy.primitive_root(p)
    U = assemble_group(CyclicSpec(generator="u", order=p - 1))
    gens = list(Q.gen_names.items())
    choices = [
        [i for i in range(p - 1) if order_of(Q, g) % order_of(U, i) == 0] for _, g in gens
    ]
    homs = []
    for images in product(*choices):
        phi = extend_homomorphism(Q, U, {g: img for (_, g), img in zip(gens, images)})
        if phi is not None:
            homs.append({name: pow(root, img, p) for (name, _), img in zip(gens, images)})
    return homs


def enumerate_16p(p: int) -> list[tuple[CatalogId, GroupTable]]:
    """All isomorphism types of order 16p for an odd prime p ≤ 31."""
    if not sympy.isprime(p) or p == 2:
        raise PrimeRequiredError(f"p must be an odd prime, got {p}")
    if p > MAX_ENUMERATED_PRIME:
        raise PrimeRequiredError(f"enumeration supports p ≤ {MAX_ENUMERATED_PRIME}, got {p}")

    found: list[tuple[CatalogId, GroupTable]] = []
    buckets: dict[tuple, list[GroupTable]] = {}
    for entry in catalog_entries(CatalogFamily.Order16):
        Q = build(entry.key)
        for units in _unit_homomorphisms(Q, p):
            params = {"p": p, **{f"u_{g}": u for g, u in units.items()}}
            cid = CatalogId(
                family=CatalogFamily.Semidirect16p, key=f"{16 * p}.{entry.key}:Z{p}", parameters=params
            )
            G = build(cid)
            bucket = buckets.setdefault(fingerprint(G), [])
            if any(isomorphic(G, H) is not None for H in bucket):
                continue
            bucket.append(G)
            found.append((cid, G))
    logger.info(f"order {16 * p}: {len(found)} types with a normal Sylow {p}-subgroup")

    if p in EXCEPTIONAL_FAMILY:
        for entry in catalog_entries(EXCEPTIONAL_FAMILY[p]):
            cid = CatalogId(family=entry.family, key=entry.key)
            found.append((cid, build(cid)))
    return found


# ── Listing ───────────────────────────────────────────────────────────────


def summarize(cid: CatalogId, G: GroupTable, description: str = "") -> GroupSummary:
    return GroupSummary(
        key=cid.key,
        family=cid.family.value,
        order=G.order,
        center=center(G).order,
        derived=derived_subgroup(G).order,
        normal_sylow={int(p): len(sylow(G, int(p))) == 1 for p in sympy.primefactors(G.order)},
        parameters=dict(cid.parameters),
        description=description,
    )


def list_groups(order: int | None = None) -> list[GroupSummary]:
    """Manifest groups, optionally of one order.

    An order 16p with p an odd prime enumerates every isomorphism type of that
    order instead of listing only the manifest.
    """
    if order is not None and order % 16 == 0 and sympy.isprime(order // 16) and order > 32:
        return [summarize(cid, G) for cid, G in enumerate_16p(order // 16)]
    out = []
    for entry in catalog_entries():
        cid = CatalogId(family=entry.family, key=entry.key)
        G = build(cid)
        if order is None or G.order == order:
            out.append(summarize(cid, G, entry.description))
    return out
