# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Pydantic models for reports the engine hands to the CLI.

Every report serializes with ``model_dump(mode="json")`` so the ``--json``
output of a command is one report per line.
"""

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field

# ── Enums ─────────────────────────────────────────────────────────────────


class Strategy(str, Enum):
    Direct = "direct"
    FGL = "fgl"
    FGLGenTwice = "fgl-gen-twice"
    FGLOrder2 = "fgl-order2"
    MultiDouble = "multidouble"
    CosetFGL = "coset-fgl"
    CyclicNormal2p = "cyclic-normal-2p"
    NormalEasy = "normal-easy"
    CxL = "cxl"
    Rankin = "rankin"
    RankinSkewed = "rankin-skewed"
    Stud71 = "stud71"
    Cited = "cited"
    Search = "search"


class Status(str, Enum):
    Passed = "passed"
    Failed = "failed"
    Error = "error"


# ── Certificates ──────────────────────────────────────────────────────────


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class CertificateReport(BaseModel):
    id: str
    location: str = ""
    binding: dict[str, int] = Field(default_factory=dict)
    strategy: Strategy
    group: str = ""
    status: Status
    checks: list[CheckResult] = Field(default_factory=list)
    degenerate: bool = False
    alternative: int | None = None
    vertices: list[str] | None = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == Status.Passed


class CorpusReport(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    reports: list[CertificateReport] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


# ── Certification ─────────────────────────────────────────────────────────


class Attempt(BaseModel):
    strategy: str
    applied: bool
    reason: str | None = None


class CertifyReport(BaseModel):
    group: str
    genset: list[str]
    strategy: str | None = None
    applied: bool
    cycle: str | None = None
    length: int | None = None
    witness: dict[str, Any] = Field(default_factory=dict)
    trace: list[Attempt] = Field(default_factory=list)


# ── Generating sets ───────────────────────────────────────────────────────


class ListedMatch(BaseModel):
    """Where a recorded generating set falls among the computed orbits."""

    words: list[str]
    minimal: bool
    orbit: int | None = None
    orbit_with_inversion: int | None = None


class GensetReport(BaseModel):
    group: str
    order: int
    aut_order: int
    max_size: int
    counts: dict[int, int] = Field(default_factory=dict)
    orbits: dict[int, int] = Field(default_factory=dict)
    orbits_with_inversion: dict[int, int] = Field(default_factory=dict)
    representatives: list[list[str]] = Field(default_factory=list)
    listed: list[ListedMatch] | None = None

    @property
    def total_orbits(self) -> int:
        return sum(self.orbits.values())

    @property
    def listed_distinct(self) -> bool:
        """Each recorded set lands in its own orbit."""
        if not self.listed:
            return True
        orbits = [m.orbit for m in self.listed]
        return None not in orbits and len(set(orbits)) == len(orbits)


# ── Catalog listing ───────────────────────────────────────────────────────


class GroupSummary(BaseModel):
    key: str
    family: str
    order: int
    center: int
    derived: int
    normal_sylow: dict[int, bool] = Field(default_factory=dict)
    """Prime → whether its Sylow subgroup is normal."""

    parameters: dict[str, int] = Field(default_factory=dict)
    description: str = ""
