# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Certificates: replayable records of a hamiltonian cycle and the argument behind it.

A certificate names a group (a catalog key or an inline spec), a generating
set, a strategy and a cycle in walk notation. ``run_certificate`` rebuilds
everything under one parameter binding and reports each check it made;
``corpus_verify`` runs every certificate of a JSONL corpus over its whole
admissible parameter grid.
"""

from __future__ import annotations

import fnmatch
import json
import logging
import re
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..exceptions import (
    CorpusParseError,
    HamCayleyError,
    HypothesisFailedError,
    InadmissibleBindingError,
    UnknownGroupError,
    WalkSyntaxError,
)
from .assemble import assemble_group, resolve_element
from .callbacks import SearchCallbacks
from .catalog import build
from .cayley import (
    CayleyGraph,
    QuotientMultigraph,
    WalkCheck,
    build_cayley,
    quotient_multigraph,
    quotient_walk,
    uses_edge,
    verify_ham_cycle,
    verify_quotient_cycle,
)
from .gensets import parse_genset, representative_gensets
from .group import Element, GroupTable, Label, evaluate
from .lemmas import (
    CitedLemma,
    CxLLemma,
    EdgeVariant,
    LemmaOutcome,
    NormalEasyLemma,
    cited_router,
    cxl_product,
    cyclic_normal_2p,
    fgl_edge_variants,
    normal_easy,
    rankin,
    rankin_skewed,
    stud71,
)
from .schemas import CertificateReport, CheckResult, CorpusReport, Status, Strategy
from .subgroups import SubgroupHandle, is_normal, subgroup_closure
from .walk import eval_int, parse_walk

logger = logging.getLogger("hamcayley.engine.certificates")

RANGE_RE = re.compile(r"^\s*(.+?)\s*\.\.\s*(.+?)\s*$")
UNARY_RE = re.compile(r"^\s*(odd|even|prime)\s*\((.+)\)\s*$")
ORD_RE = re.compile(r"^\s*ord\s*\((.+?),(.+?)\)\s*(==|!=|<=|>=|<|>)\s*(.+?)\s*$")
BINARY_RE = re.compile(r"^\s*(.+?)\s*(==|!=|<=|>=|<|>|\|)\s*(.+?)\s*$")

QUOTIENT_STRATEGIES = {Strategy.FGL, Strategy.CosetFGL, Strategy.FGLGenTwice, Strategy.FGLOrder2}

LEMMA_ARGS: dict[Strategy, tuple[str, ...]] = {
    Strategy.NormalEasy: ("s",),
    Strategy.Rankin: ("a", "b"),
    Strategy.RankinSkewed: ("t", "a", "b"),
    Strategy.Stud71: ("s1", "s2"),
    Strategy.CyclicNormal2p: ("s", "p", "q"),
    Strategy.CxL: ("x",),
    Strategy.Cited: (),
}


# ── Admissibility predicates ──────────────────────────────────────────────


@dataclass(frozen=True)
class Predicate:
    """One admissibility condition such as ``odd(i)``, ``4 | p-1`` or ``ord(k, p) == 4``."""

    source: str
    kind: str
    args: tuple[str, ...]

    def holds(self, binding: Mapping[str, int]) -> bool:
        if self.kind in ("odd", "even", "prime"):
            v = eval_int(self.args[0], binding)
            if self.kind == "odd":
                return v % 2 == 1
            if self.kind == "even":
                return v % 2 == 0
            return bool(sympy.isprime(v))
        if self.kind == "ord":
            a, m, op, rhs = self.args
            a_v, m_v = eval_int(a, binding), eval_int(m, binding)
            if m_v < 2 or sympy.gcd(a_v, m_v) != 1:
                return False
            return _compare(int(sympy.n_order(a_v % m_v, m_v)), op, eval_int(rhs, binding))
        lhs, op, rhs = self.args
        return _compare(eval_int(lhs, binding), op, eval_int(rhs, binding))


def _compare(a: int, op: str, b: int) -> bool:
    if op == "|":
        return a != 0 and b % a == 0
    return {
        "==": a == b,
        "!=": a != b,
        "<=": a <= b,
        ">=": a >= b,
        "<": a < b,
        ">": a > b,
    }[op]


def parse_predicate(source: str) -> Predicate:
    if m := UNARY_RE.match(source):
        return Predicate(source, m.group(1), (m.group(2).strip(),))
    if m := ORD_RE.match(source):
        return Predicate(source, "ord", tuple(x.strip() for x in m.groups()))
    if m := BINARY_RE.match(source):
        return Predicate(source, "compare", (m.group(1), m.group(2), m.group(3)))
    raise ValueError(f"unrecognized predicate '{source}'")


# ── Model ─────────────────────────────────────────────────────────────────


class DoubleEdgeClaim(BaseModel):
    """Two parallel edges between the cosets of two words; labels read from either end."""

    cosets: tuple[str, str]
    labels: tuple[str, str]


class Certificate(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    location: str = ""
    group: str | dict[str, Any]
    genset: dict[str, str]
    strategy: Strategy
    subgroup: list[str] | None = None
    subgroup_prefix: str = "N"
    cycle: str | None = None
    alternatives: list[str] = Field(default_factory=list)
    params: dict[str, list[int] | str] = Field(default_factory=dict)
    admissible: list[str] = Field(default_factory=list)
    expected_endpoint: str | None = None
    expected_double_edge: DoubleEdgeClaim | None = None
    expected_counts: dict[str, int] = Field(default_factory=dict)
    lemma_args: dict[str, str] = Field(default_factory=dict)
    sweep_size: int | None = None
    sweep_lemmas: list[Strategy] = Field(default_factory=list)

    @field_validator("admissible")
    @classmethod
    def _predicates_parse(cls, value: list[str]) -> list[str]:
        for source in value:
            parse_predicate(source)
        return value

    @field_validator("params")
    @classmethod
    def _ranges_parse(cls, value: dict[str, list[int] | str]) -> dict[str, list[int] | str]:
        for name, spec in value.items():
            if isinstance(spec, str) and not RANGE_RE.match(spec):
                raise ValueError(f"parameter {name}: expected 'a..b', got '{spec}'")
        return value

    @model_validator(mode="after")
    def _strategy_fields(self) -> Certificate:
        s = self.strategy
        if self.sweep_size is not None:
            if not self.sweep_lemmas:
                raise ValueError("a sweep needs sweep_lemmas")
            return self
        if s == Strategy.Direct and not self.cycle:
            raise ValueError("strategy direct needs a cycle")
        if s in (Strategy.FGL, Strategy.CosetFGL, Strategy.MultiDouble):
            if not self.cycle or not self.subgroup:
                raise ValueError(f"strategy {s.value} needs a cycle and a subgroup")
        if s == Strategy.MultiDouble and self.expected_double_edge is None:
            raise ValueError("strategy multidouble needs expected_double_edge")
        if s in (Strategy.FGLGenTwice, Strategy.FGLOrder2):
            if not self.subgroup or "s" not in self.lemma_args:
                raise ValueError(f"strategy {s.value} needs a subgroup and lemma_args.s")
            if s == Strategy.FGLGenTwice and self.cycle and "t" not in self.lemma_args:
                raise ValueError("strategy fgl-gen-twice with a cycle needs lemma_args.t")
        if s in LEMMA_ARGS:
            missing = [k for k in LEMMA_ARGS[s] if k not in self.lemma_args]
            if missing:
                raise ValueError(f"strategy {s.value} needs lemma_args {', '.join(missing)}")
        return self

    @property
    def cycles(self) -> list[str]:
        return ([self.cycle] if self.cycle else []) + list(self.alternatives)

    @property
    def predicates(self) -> list[Predicate]:
        return [parse_predicate(source) for source in self.admissible]


# ── Parameter grids ───────────────────────────────────────────────────────


def _values(spec: list[int] | str, partial: Mapping[str, int]) -> list[int]:
    if isinstance(spec, list):
        return list(spec)
    lo, hi = RANGE_RE.match(spec).groups()
    return list(range(eval_int(lo, partial), eval_int(hi, partial) + 1))


def parameter_grid(c: Certificate) -> list[dict[str, int]]:
    """Every admissible binding; ranges may refer to parameters declared before them."""
    bindings: list[dict[str, int]] = [{}]
    for name, spec in c.params.items():
        bindings = [{**b, name: v} for b in bindings for v in _values(spec, b)]
    predicates = c.predicates
    return [b for b in bindings if all(pred.holds(b) for pred in predicates)]


def check_binding(c: Certificate, binding: Mapping[str, int]) -> None:
    missing = [name for name in c.params if name not in binding]
    if missing:
        raise InadmissibleBindingError(f"{c.id}: unbound parameter(s) {', '.join(missing)}")
    for pred in c.predicates:
        if not pred.holds(binding):
            raise InadmissibleBindingError(f"{c.id}: binding {dict(binding)} violates '{pred.source}'")


# ── Replay ────────────────────────────────────────────────────────────────


def certificate_group(c: Certificate, binding: Mapping[str, int]) -> GroupTable:
    if isinstance(c.group, str):
        return build(c.group)
    return assemble_group(c.group, binding)


def _subgroup(G: GroupTable, words: Iterable[str], binding: Mapping[str, int], genset: dict) -> SubgroupHandle:
    return subgroup_closure(G, [resolve_element(G, w, binding, genset) for w in words])


def _single_label(text: str, binding: Mapping[str, int]) -> Label:
    labels = parse_walk(text, binding)
    if len(labels) != 1:
        raise WalkSyntaxError(f"'{text}' is not a single label", 0, text)
    return labels[0]


class _Replay:
    """Checks of one cycle candidate, accumulated in order."""

    def __init__(self) -> None:
        self.checks: list[CheckResult] = []
        self.degenerate = False
        self.vertices: list[str] | None = None

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(CheckResult(name=name, passed=bool(passed), detail=detail))
        return bool(passed)

    def walk(self, name: str, check: WalkCheck) -> bool:
        self.degenerate = self.degenerate or check.degenerate
        return self.add(name, check.ok, check.reason or "")

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(ch.passed for ch in self.checks)


def _counts(r: _Replay, c: Certificate, cycle: Sequence[Label]) -> None:
    for name, expected in c.expected_counts.items():
        used = sum(1 for label in cycle if label.name == name)
        r.add(f"label-count:{name}", used == expected, f"{used} uses, expected {expected}")


def _endpoint(r: _Replay, c: Certificate, G: GroupTable, g: CayleyGraph, endpoint: Element,
              binding: Mapping[str, int]) -> None:
    if c.expected_endpoint is None:
        return
    expected = resolve_element(G, c.expected_endpoint, binding, g.genset)
    r.add("endpoint-expected", endpoint == expected,
          f"{G.element_name(endpoint)} vs {c.expected_endpoint} = {G.element_name(expected)}")


def _lift(r: _Replay, g: CayleyGraph, H: SubgroupHandle, cycle: Sequence[Label], endpoint: Element) -> None:
    G = g.group
    generates = subgroup_closure(G, [endpoint]) == H
    r.add("endpoint-generates", generates, f"⟨{G.element_name(endpoint)}⟩ has order "
          f"{subgroup_closure(G, [endpoint]).order}, subgroup has order {H.order}")
    if generates:
        lifted = list(cycle) * H.order
        check = verify_ham_cycle(g, lifted)
        r.walk("lifted-cycle", check)
        r.vertices = [G.element_name(0)] + [G.element_name(v) for v in check.visited[:-1]]


def _quotient_vertices(qm: QuotientMultigraph, cycle: Sequence[Label]) -> list[str]:
    _, visited = quotient_walk(qm, cycle)
    return [qm.coset_name(0)] + [qm.coset_name(v) for v in visited[:-1]]


def _replay_direct(r: _Replay, c: Certificate, g: CayleyGraph, cycle: list[Label], binding) -> None:
    check = verify_ham_cycle(g, cycle)
    r.walk("hamiltonian-cycle", check)
    _counts(r, c, cycle)
    r.vertices = [g.group.element_name(0)] + [g.group.element_name(v) for v in check.visited[:-1]]


def _replay_quotient(r: _Replay, c: Certificate, g: CayleyGraph, cycle: list[Label], binding) -> None:
    G = g.group
    H = _subgroup(G, c.subgroup, binding, g.genset)
    if c.strategy != Strategy.CosetFGL:
        r.add("subgroup-normal", is_normal(G, H), f"order {H.order}")
    r.add("subgroup-cyclic", H.is_cyclic(), f"order {H.order}")
    qm = quotient_multigraph(g, H, c.subgroup_prefix)
    check = verify_quotient_cycle(qm, cycle)
    r.walk("quotient-hamiltonian", check)
    r.vertices = _quotient_vertices(qm, cycle)
    _counts(r, c, cycle)
    _endpoint(r, c, G, g, check.endpoint, binding)
    if subgroup_closure(G, [check.endpoint]) != H and c.strategy in (Strategy.FGLGenTwice, Strategy.FGLOrder2):
        swapped = _swap_edge(r, c, g, H, cycle, binding)
        if swapped is None:
            return
        cycle = swapped
        check = verify_quotient_cycle(qm, cycle)
        r.walk("swapped-quotient-hamiltonian", check)
    _lift(r, g, H, cycle, check.endpoint)


def _swap_edge(r: _Replay, c: Certificate, g: CayleyGraph, H: SubgroupHandle, cycle: list[Label],
               binding) -> list[Label] | None:
    """Replace the first s-step (or s⁻¹-step) by t (or t⁻¹); s⁻¹t must generate H."""
    G = g.group
    s = _single_label(c.lemma_args["s"], binding)
    t = _single_label(c.lemma_args["t"], binding) if "t" in c.lemma_args else s.inverse()
    s_el, t_el = g.element(s), g.element(t)
    ok = subgroup_closure(G, [G.mul(G.inv[s_el], t_el)]) == H
    if not r.add("swap-partner", ok, f"⟨{s.text}⁻¹{t.text}⟩ vs subgroup of order {H.order}"):
        return None
    for i, label in enumerate(cycle):
        el = g.element(label)
        if el == s_el:
            return cycle[:i] + [t] + cycle[i + 1:]
        if el == G.inv[s_el]:
            return cycle[:i] + [t.inverse()] + cycle[i + 1:]
    r.add("swap-site", False, f"the cycle never steps along {s.text}")
    return None


def _replay_multidouble(r: _Replay, c: Certificate, g: CayleyGraph, cycle: list[Label], binding) -> None:
    G = g.group
    H = _subgroup(G, c.subgroup, binding, g.genset)
    r.add("subgroup-prime", sympy.isprime(H.order), f"order {H.order}")
    qm = quotient_multigraph(g, H, c.subgroup_prefix)
    claim = c.expected_double_edge
    c1, c2 = (qm.coset_of[resolve_element(G, w, binding, g.genset)] for w in claim.cosets)
    l1, l2 = (_single_label(text, binding) for text in claim.labels)
    s1, s2 = g.element(l1), g.element(l2)
    if qm.step(c1, l1) != c2 and qm.step(c2, l1) == c1:
        c1, c2 = c2, c1
    parallel = c1 != c2 and s1 != s2 and qm.step(c1, l1) == c2 and qm.step(c1, l2) == c2
    r.add("double-edge", parallel, f"{qm.coset_name(c1)} – {qm.coset_name(c2)} via {l1.text}, {l2.text}")

    check = verify_quotient_cycle(qm, cycle)
    r.walk("quotient-hamiltonian", check)
    r.vertices = _quotient_vertices(qm, cycle)
    r.add("uses-double-edge", uses_edge(qm, cycle, (c1, c2)))
    _counts(r, c, cycle)
    if not (parallel and check.ok):
        return
    other = _switch(qm, cycle, c1, c2, (l1, l2))
    if not r.add("switchable", other is not None, "no step crosses either parallel edge"):
        return
    e1, e2 = check.endpoint, evaluate(G, other, g.genset)
    r.add("endpoints-differ", e1 != e2, f"{G.element_name(e1)} vs {G.element_name(e2)}")
    _endpoint(r, c, G, g, e1, binding)
    chosen, endpoint = (cycle, e1) if e1 != 0 else (other, e2)
    _lift(r, g, H, chosen, endpoint)


def _switch(qm: QuotientMultigraph, cycle: list[Label], c1: int, c2: int,
            labels: tuple[Label, Label]) -> list[Label] | None:
    """The cycle with its crossing of one parallel edge moved to the other."""
    g = qm.base
    elements = [g.element(lab) for lab in labels]
    inv = g.group.inv
    _, visited = quotient_walk(qm, cycle)
    path = [0, *visited]
    for i, label in enumerate(cycle):
        a, b = path[i], path[i + 1]
        el = g.element(label)
        if (a, b) == (c1, c2) and el in elements:
            k = elements.index(el)
            return cycle[:i] + [labels[1 - k]] + cycle[i + 1:]
        if (a, b) == (c2, c1) and el in (inv[elements[0]], inv[elements[1]]):
            k = 0 if el == inv[elements[0]] else 1
            return cycle[:i] + [labels[1 - k].inverse()] + cycle[i + 1:]
    return None


# ── Lemma-tagged certificates ─────────────────────────────────────────────


def _run_lemma(strategy: Strategy, G: GroupTable, g: CayleyGraph, args: Mapping[str, str],
               subgroup: SubgroupHandle | None, binding, callbacks: SearchCallbacks | None) -> LemmaOutcome:
    if strategy == Strategy.NormalEasy:
        return normal_easy(G, g, args["s"], callbacks)
    if strategy == Strategy.Rankin:
        return rankin(G, g, args["a"], args["b"], callbacks)
    if strategy == Strategy.RankinSkewed:
        return rankin_skewed(G, g, args["t"], args["a"], args["b"], callbacks)
    if strategy == Strategy.Stud71:
        return stud71(G, g, args["s1"], args["s2"], callbacks)
    if strategy == Strategy.CyclicNormal2p:
        return cyclic_normal_2p(G, g, args["s"], eval_int(args["p"], binding),
                                eval_int(args["q"], binding), callbacks)
    if strategy == Strategy.CxL:
        return cxl_product(G, g, [x.strip() for x in args["x"].split(",")], callbacks)
    if strategy == Strategy.Cited:
        return cited_router(G, g, callbacks)
    if strategy in (Strategy.FGLGenTwice, Strategy.FGLOrder2):
        variant = EdgeVariant.GenTwice if strategy == Strategy.FGLGenTwice else EdgeVariant.Order2
        return fgl_edge_variants(G, g, subgroup, args["s"], variant, callbacks)
    raise HamCayleyError(f"strategy {strategy.value} is not lemma-tagged")


def _replay_lemma(r: _Replay, c: Certificate, g: CayleyGraph, binding, callbacks) -> None:
    G = g.group
    H = _subgroup(G, c.subgroup, binding, g.genset) if c.subgroup else None
    try:
        outcome = _run_lemma(c.strategy, G, g, c.lemma_args, H, binding, callbacks)
    except HypothesisFailedError as e:
        r.add("lemma-applied", False, f"hypothesis-failed: {e}")
        return
    r.add("lemma-applied", outcome.applied, outcome.reason or "")
    if outcome.applied:
        check = verify_ham_cycle(g, outcome.cycle)
        r.walk("hamiltonian-cycle", check)
        r.vertices = [G.element_name(0)] + [G.element_name(v) for v in check.visited[:-1]]


def _sweep_attempt(strategy: Strategy, G: GroupTable, g: CayleyGraph, H: SubgroupHandle | None,
                   callbacks) -> LemmaOutcome:
    if strategy == Strategy.NormalEasy:
        return NormalEasyLemma.attempt(G, g, callbacks)
    if strategy in (Strategy.FGLGenTwice, Strategy.FGLOrder2):
        variant = EdgeVariant.GenTwice if strategy == Strategy.FGLGenTwice else EdgeVariant.Order2
        last = LemmaOutcome.fail(strategy.value, "no label admits the swap")
        for label in g.labels:
            try:
                outcome = fgl_edge_variants(G, g, H, label, variant, callbacks)
            except HypothesisFailedError as e:
                last = LemmaOutcome.fail(strategy.value, f"hypothesis-failed: {e}")
                continue
            if outcome.applied:
                return outcome
            last = outcome
        return last
    if strategy == Strategy.CxL:
        return CxLLemma.attempt(G, g, callbacks)
    return CitedLemma.attempt(G, g, callbacks)


def _replay_sweep(r: _Replay, c: Certificate, G: GroupTable, binding, callbacks) -> None:
    """Every Aut-orbit of minimal generating sets of the given size yields to a listed lemma."""
    H = _subgroup(G, c.subgroup, binding, {}) if c.subgroup else None
    reps = [s for s in representative_gensets(G, c.sweep_size, callbacks) if s.size == c.sweep_size]
    r.add("sweep-nonempty", bool(reps), f"{len(reps)} orbit(s) of size {c.sweep_size}")
    for rep in reps:
        g = build_cayley(G, rep.as_genset(G))
        names = ", ".join(rep.names(G))
        applied = None
        for strategy in c.sweep_lemmas:
            try:
                outcome = _sweep_attempt(strategy, G, g, H, callbacks)
            except HypothesisFailedError:
                continue
            if outcome.applied and verify_ham_cycle(g, outcome.cycle):
                applied = strategy
                break
        r.add(f"sweep:{{{names}}}", applied is not None, applied.value if applied else "no lemma applied")


# ── Entry points ──────────────────────────────────────────────────────────


def run_certificate(
    c: Certificate,
    binding: Mapping[str, int] | None = None,
    callbacks: SearchCallbacks | None = None,
    show_vertices: bool = False,
) -> CertificateReport:
    """Replay one certificate under one binding.

    Raises InadmissibleBindingError and UnknownGroupError; every other domain
    error becomes a report with status ``error``.
    """
    binding = dict(binding or {})
    check_binding(c, binding)
    report = CertificateReport(id=c.id, location=c.location, binding=binding, strategy=c.strategy,
                               status=Status.Failed)
    G = certificate_group(c, binding)
    report.group = G.name
    try:
        if c.sweep_size is not None:
            r = _Replay()
            _replay_sweep(r, c, G, binding, callbacks)
            return _finish(report, r, None, show_vertices)
        genset = parse_genset(G, c.genset, binding)
        g = build_cayley(G, genset)
        if not c.cycles:
            r = _Replay()
            _replay_lemma(r, c, g, binding, callbacks)
            return _finish(report, r, None, show_vertices)
        candidates = c.cycles
        last = None
        for i, source in enumerate(candidates):
            r = _Replay()
            cycle = parse_walk(source, binding)
            if c.strategy == Strategy.MultiDouble:
                _replay_multidouble(r, c, g, cycle, binding)
            elif c.strategy in QUOTIENT_STRATEGIES:
                _replay_quotient(r, c, g, cycle, binding)
            else:
                _replay_direct(r, c, g, cycle, binding)
            alternative = i if len(candidates) > 1 else None
            if r.passed:
                return _finish(report, r, alternative, show_vertices)
            last = (r, alternative)
        return _finish(report, last[0], last[1], show_vertices)
    except UnknownGroupError:
        raise
    except HamCayleyError as e:
        logger.warning(f"{c.id} {binding}: {e}")
        report.status = Status.Error
        report.error = str(e)
        return report


def _finish(report: CertificateReport, r: _Replay, alternative: int | None,
            show_vertices: bool) -> CertificateReport:
    report.checks = r.checks
    report.degenerate = r.degenerate
    report.alternative = alternative
    report.status = Status.Passed if r.passed else Status.Failed
    if show_vertices:
        report.vertices = r.vertices
    return report


def load_corpus(path: Path | str) -> list[Certificate]:
    """One certificate per non-blank line; ids are unique."""
    path = Path(path)
    if not path.exists():
        raise CorpusParseError(f"corpus file not found: {path}")
    certificates: list[Certificate] = []
    seen: set[str] = set()
    for line_no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            cert = Certificate.model_validate(json.loads(line))
        except json.JSONDecodeError as e:
            raise CorpusParseError(f"line {line_no}: invalid JSON ({e.msg})", line_no)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(x) for x in first["loc"]) or "record"
            raise CorpusParseError(f"line {line_no}: {where}: {first['msg']}", line_no)
        if cert.id in seen:
            raise CorpusParseError(f"line {line_no}: duplicate id '{cert.id}'", line_no)
        seen.add(cert.id)
        certificates.append(cert)
    logger.info(f"loaded {len(certificates)} certificates from {path}")
    return certificates


def _jobs(certificates: Iterable[Certificate], fixed: Mapping[str, int]):
    for c in certificates:
        grid = parameter_grid(c)
        pinned = {k: v for k, v in fixed.items() if k in c.params}
        chosen = [b for b in grid if all(b[k] == v for k, v in pinned.items())]
        if pinned and not chosen:
            binding = {**(grid[0] if grid else {}), **pinned}
            yield c, binding
            continue
        if not grid:
            logger.warning(f"{c.id}: no admissible binding")
        for binding in chosen:
            yield c, binding


def corpus_verify(
    certificates: Path | str | Sequence[Certificate],
    pattern: str | None = None,
    fixed: Mapping[str, int] | None = None,
    callbacks: SearchCallbacks | None = None,
    show_vertices: bool = False,
) -> CorpusReport:
    """Run every certificate whose id matches ``pattern`` over its admissible grid."""
    if isinstance(certificates, (str, Path)):
        certificates = load_corpus(certificates)
    selected = [c for c in certificates if not pattern or fnmatch.fnmatchcase(c.id, pattern)]
    jobs = list(_jobs(selected, dict(fixed or {})))

    def run(job: tuple[Certificate, dict[str, int]]) -> CertificateReport:
        c, binding = job
        try:
            return run_certificate(c, binding, callbacks, show_vertices)
        except (InadmissibleBindingError, UnknownGroupError) as e:
            return CertificateReport(id=c.id, location=c.location, binding=binding,
                                     strategy=c.strategy, status=Status.Error, error=str(e))

    workers = callbacks.max_workers if callbacks else 0
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, jobs))
    else:
        reports = [run(job) for job in jobs]
    reports.sort(key=lambda rep: (rep.id, sorted(rep.binding.items())))
    passed = sum(1 for rep in reports if rep.passed)
    return CorpusReport(total=len(reports), passed=passed, failed=len(reports) - passed, reports=reports)


def parse_bindings(text: str | None) -> dict[str, int]:
    """``p=5,k=2`` as a mapping."""
    out: dict[str, int] = {}
    if not text:
        return out
    for part in text.split(","):
        name, sep, value = part.partition("=")
        if not sep or not name.strip():
            raise InadmissibleBindingError(f"expected NAME=VALUE, got '{part.strip()}'")
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise InadmissibleBindingError(f"'{value.strip()}' is not an integer")
    return out
