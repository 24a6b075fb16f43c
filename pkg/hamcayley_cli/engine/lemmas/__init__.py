# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Lifting lemmas, in the order the certifier tries them."""

from .base import LemmaOutcome, LiftingLemma
from .cited import CitedLemma, cited_router
from .cxl import CxLLemma, cxl_product, prism_cycle
from .cyclic_normal import CyclicNormal2pLemma, NormalEasyLemma, cyclic_normal_2p, normal_easy
from .fgl import EdgeVariant, FGLLemma, coset_fgl, fgl_edge_variants, fgl_lift
from .multidouble import MultiDoubleLemma, multidouble, switch_parallel
from .rankin import RankinLemma, RankinSkewedLemma, rankin, rankin_skewed
from .stud71 import Stud71Lemma, stud71

ROUTE: tuple[type[LiftingLemma], ...] = (
    NormalEasyLemma,
    FGLLemma,
    MultiDoubleLemma,
    CyclicNormal2pLemma,
    CxLLemma,
    RankinLemma,
    RankinSkewedLemma,
    Stud71Lemma,
    CitedLemma,
)

__all__ = [
    "ROUTE",
    "CitedLemma",
    "CxLLemma",
    "CyclicNormal2pLemma",
    "EdgeVariant",
    "FGLLemma",
    "LemmaOutcome",
    "LiftingLemma",
    "MultiDoubleLemma",
    "NormalEasyLemma",
    "RankinLemma",
    "RankinSkewedLemma",
    "Stud71Lemma",
    "cited_router",
    "coset_fgl",
    "cxl_product",
    "cyclic_normal_2p",
    "fgl_edge_variants",
    "fgl_lift",
    "multidouble",
    "normal_easy",
    "prism_cycle",
    "rankin",
    "rankin_skewed",
    "stud71",
    "switch_parallel",
]
