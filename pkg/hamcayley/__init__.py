# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""hamcayley: finite groups, Cayley graphs and verified hamiltonian cycles.

Public API for building groups, searching Cayley graphs, applying the lifting
lemmas and replaying certificates from scripts or notebooks.

The CLI (`hamcayley verify`, `hamcayley certify`, etc.) lives in the sibling
`hamcayley_cli` module and is considered internal; it may change between
releases. Import from `hamcayley` for stability.
"""

from __future__ import annotations

__version__ = "1.0.0"

from hamcayley_cli.engine import resolve_group
from hamcayley_cli.engine.assemble import assemble_group, parse_group_spec, resolve_element
from hamcayley_cli.engine.callbacks import SearchCallbacks
from hamcayley_cli.engine.catalog import (
    CatalogFamily,
    CatalogId,
    build,
    build_exceptional,
    build_order16,
    enumerate_16p,
    list_groups,
)
from hamcayley_cli.engine.cayley import (
    CayleyGraph,
    QuotientMultigraph,
    build_cayley,
    double_edges,
    quotient_multigraph,
    verify_ham_cycle,
    verify_quotient_cycle,
)
from hamcayley_cli.engine.certificates import (
    Certificate,
    corpus_verify,
    load_corpus,
    parameter_grid,
    run_certificate,
)
from hamcayley_cli.engine.certify import certify_group
from hamcayley_cli.engine.gensets import (
    genset_report,
    minimal_gensets,
    parse_genset,
    representative_gensets,
    up_to_aut,
)
from hamcayley_cli.engine.group import GroupTable, Label, commutator, conjugate, evaluate, order_of
from hamcayley_cli.engine.lemmas import (
    LemmaOutcome,
    coset_fgl,
    cxl_product,
    cyclic_normal_2p,
    fgl_edge_variants,
    fgl_lift,
    multidouble,
    normal_easy,
    prism_cycle,
    rankin,
    rankin_skewed,
    stud71,
)
from hamcayley_cli.engine.morphisms import automorphisms, fingerprint, isomorphic, order_profile
from hamcayley_cli.engine.schemas import CertificateReport, CertifyReport, CorpusReport, Strategy
from hamcayley_cli.engine.search import SearchConstraint, search_directed_ham, search_ham
from hamcayley_cli.engine.subgroups import (
    SubgroupHandle,
    center,
    derived_subgroup,
    frattini,
    is_normal,
    quotient,
    subgroup_closure,
    sylow,
)
from hamcayley_cli.engine.walk import parse_walk, render_labels
from hamcayley_cli.exceptions import HamCayleyError

__all__ = [
    "__version__",
    # Groups
    "GroupTable",
    "Label",
    "assemble_group",
    "parse_group_spec",
    "resolve_element",
    "resolve_group",
    "evaluate",
    "order_of",
    "conjugate",
    "commutator",
    # Catalog
    "CatalogFamily",
    "CatalogId",
    "build",
    "build_order16",
    "build_exceptional",
    "enumerate_16p",
    "list_groups",
    # Subgroups and morphisms
    "SubgroupHandle",
    "subgroup_closure",
    "is_normal",
    "quotient",
    "center",
    "derived_subgroup",
    "frattini",
    "sylow",
    "automorphisms",
    "isomorphic",
    "fingerprint",
    "order_profile",
    # Cayley graphs and search
    "CayleyGraph",
    "QuotientMultigraph",
    "build_cayley",
    "quotient_multigraph",
    "double_edges",
    "verify_ham_cycle",
    "verify_quotient_cycle",
    "SearchCallbacks",
    "SearchConstraint",
    "search_ham",
    "search_directed_ham",
    # Lifting lemmas
    "LemmaOutcome",
    "fgl_lift",
    "coset_fgl",
    "fgl_edge_variants",
    "multidouble",
    "normal_easy",
    "cyclic_normal_2p",
    "cxl_product",
    "prism_cycle",
    "rankin",
    "rankin_skewed",
    "stud71",
    # Generating sets
    "minimal_gensets",
    "up_to_aut",
    "representative_gensets",
    "genset_report",
    "parse_genset",
    # Walks and certificates
    "parse_walk",
    "render_labels",
    "Certificate",
    "load_corpus",
    "parameter_grid",
    "run_certificate",
    "corpus_verify",
    "certify_group",
    "Strategy",
    "CertificateReport",
    "CorpusReport",
    "CertifyReport",
    # Errors
    "HamCayleyError",
]
