# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""hamcayley exceptions."""


class HamCayleyError(Exception):
    """Base exception for hamcayley."""

    pass


# ── Group construction ────────────────────────────────────────────────────


class InvalidActionError(HamCayleyError):
    """Raised when action data is not a homomorphism into the automorphisms of the normal factor."""

    pass


class OrderOverflowError(HamCayleyError):
    """Raised when a group construction would exceed the supported order."""

    def __init__(self, message: str, order: int = None, limit: int = None):
        super().__init__(message)
        self.order = order
        self.limit = limit


class UnboundNameError(HamCayleyError):
    """Raised when a word or label names an element the group does not bind."""

    pass


class UnknownGroupError(HamCayleyError):
    """Raised when a catalog key or group reference cannot be resolved."""

    pass


class DimensionMismatchError(HamCayleyError):
    """Raised when a matrix and a polynomial (or two matrices) disagree in size."""

    pass


# ── Subgroups ─────────────────────────────────────────────────────────────


class NotNormalError(HamCayleyError):
    """Raised when an operation requires a normal subgroup and receives another."""

    pass


class NotCyclicError(HamCayleyError):
    """Raised when an operation requires a cyclic subgroup and receives another."""

    pass


class PrimeRequiredError(HamCayleyError):
    """Raised when an argument must be a prime (or a prime dividing the order) and is not."""

    pass


# ── Graphs and search ─────────────────────────────────────────────────────


class IdentityInGensetError(HamCayleyError):
    """Raised when a connection set contains the identity."""

    pass


class DisconnectedGensetError(HamCayleyError):
    """Raised when a connection set does not generate the group."""

    pass


class SearchTimeoutError(HamCayleyError):
    """Raised when a hamiltonian search exhausts its time budget.

    Distinct from a search that finishes and finds nothing: a timeout says
    nothing about existence.
    """

    def __init__(self, message: str, elapsed: float = 0.0, trace: list = None):
        super().__init__(message)
        self.elapsed = elapsed
        self.trace = trace or []


class HypothesisFailedError(HamCayleyError):
    """Raised when a lemma's hypotheses do not hold for the given input."""

    pass


# ── Walk notation and certificates ────────────────────────────────────────


class WalkSyntaxError(HamCayleyError):
    """Raised when walk notation cannot be parsed."""

    def __init__(self, message: str, position: int = 0, source: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.source = source


class UnboundParameterError(HamCayleyError):
    """Raised when an integer expression uses a parameter with no value."""

    pass


class EmptyWalkError(HamCayleyError):
    """Raised when truncation leaves a repeated block with no labels."""

    pass


class CorpusParseError(HamCayleyError):
    """Raised when a corpus line is not a valid certificate record."""

    def __init__(self, message: str, line_no: int = 0):
        super().__init__(f"line {line_no}: {message}" if line_no else message)
        self.line_no = line_no


class InadmissibleBindingError(HamCayleyError):
    """Raised when parameter values violate a certificate's admissibility predicates."""

    pass
