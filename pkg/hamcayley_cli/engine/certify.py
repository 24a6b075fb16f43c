# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Certify one Cayley graph: route through the lifting lemmas, then fall back to search."""

from __future__ import annotations

import logging
from collections.abc import Mapping

from ..exceptions import DisconnectedGensetError, HamCayleyError, HypothesisFailedError, SearchTimeoutError
from .callbacks import SearchCallbacks
from .cayley import build_cayley, is_connected, verify_ham_cycle
from .group import Element, GroupTable
from .lemmas import ROUTE, LemmaOutcome
from .lemmas.base import SEARCH_BACKED
from .schemas import Attempt, CertifyReport, Strategy
from .search import SearchConstraint, search_ham
from .walk import render_labels

logger = logging.getLogger("hamcayley.engine.certify")


def certify_group(
    G: GroupTable,
    S: Mapping[str, Element],
    callbacks: SearchCallbacks | None = None,
    timeout: float | None = None,
) -> CertifyReport:
    """First verified cycle along the lemma route, with the trace of every attempt.

    A search timeout propagates as SearchTimeoutError carrying the trace so far.
    """
    callbacks = callbacks or SearchCallbacks()
    g = build_cayley(G, S)
    if not is_connected(g):
        raise DisconnectedGensetError(f"{', '.join(S)} does not generate {G.name}")
    report = CertifyReport(group=G.name, genset=list(g.genset), applied=False)
    trace = report.trace

    def record(outcome: LemmaOutcome) -> None:
        trace.append(Attempt(strategy=outcome.strategy, applied=outcome.applied, reason=outcome.reason))
        callbacks.on_attempt(outcome.strategy, outcome.applied, outcome.reason or "")

    try:
        for lemma in ROUTE:
            if callbacks.is_terminated():
                break
            try:
                outcome = lemma.attempt(G, g, callbacks)
            except HypothesisFailedError as e:
                outcome = LemmaOutcome.fail(lemma.tag, f"hypothesis-failed: {e}")
            except SearchTimeoutError:
                raise
            except HamCayleyError as e:
                logger.warning(f"{g!r}: {lemma.tag} raised {type(e).__name__}: {e}")
                outcome = LemmaOutcome.fail(lemma.tag, f"lemma-error: {e}")
            record(outcome)
            if outcome.applied and verify_ham_cycle(g, outcome.cycle):
                logger.info(f"{g!r}: {outcome.strategy} applied")
                return _applied(report, outcome)

        logger.info(f"{g!r}: no lemma applied, searching")
        cycle = search_ham(g, SearchConstraint(timeout=timeout), callbacks)
    except SearchTimeoutError as e:
        e.trace = list(trace)
        raise
    if cycle is None:
        record(LemmaOutcome.fail(Strategy.Search.value, "no-hamiltonian-cycle"))
        return report
    outcome = LemmaOutcome(Strategy.Search.value, True, cycle, {"route": SEARCH_BACKED})
    record(outcome)
    return _applied(report, outcome)


def _applied(report: CertifyReport, outcome: LemmaOutcome) -> CertifyReport:
    report.strategy = outcome.strategy
    report.applied = True
    report.cycle = render_labels(outcome.cycle)
    report.length = len(outcome.cycle)
    report.witness = outcome.witness
    return report
