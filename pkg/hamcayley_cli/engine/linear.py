# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024-2026 hamcayley contributors
"""Action matrices over prime fields.

Vectors are rows and matrices act on the right: the image of basis vector ``i``
is row ``i``. A 1×1 matrix over Z_p is a unit exponent acting on a cyclic group.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np
import sympy

from ..exceptions import DimensionMismatchError, HamCayleyError


@dataclass(frozen=True, eq=False)
class ActionMatrix:
    entries: np.ndarray
    modulus: int = 2

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: int = 2) -> ActionMatrix:
        entries = np.asarray(rows, dtype=np.int64) % modulus
        if entries.ndim != 2:
            raise DimensionMismatchError("action matrix must be two-dimensional")
        entries.setflags(write=False)
        return cls(entries, modulus)

    @classmethod
    def unit(cls, k: int, p: int) -> ActionMatrix:
        return cls.from_rows([[k]], p)

    @classmethod
    def identity(cls, size: int, modulus: int = 2) -> ActionMatrix:
        return cls.from_rows(np.eye(size, dtype=np.int64), modulus)

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])

    @property
    def is_square(self) -> bool:
        return self.entries.shape[0] == self.entries.shape[1]

    def __matmul__(self, other: ActionMatrix) -> ActionMatrix:
        if self.modulus != other.modulus or self.entries.shape[1] != other.entries.shape[0]:
            raise DimensionMismatchError("matrices do not compose")
        return ActionMatrix.from_rows(self.entries @ other.entries, self.modulus)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ActionMatrix)
            and self.modulus == other.modulus
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.entries.tobytes()))

    def power(self, n: int) -> ActionMatrix:
        if n < 0:
            return self.inverse().power(-n)
        acc = ActionMatrix.identity(self.size, self.modulus)
        base = self
        while n:
            if n & 1:
                acc = acc @ base
            base = base @ base
            n >>= 1
        return acc

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.entries, np.eye(self.size, dtype=np.int64)))

    def inverse(self) -> ActionMatrix:
        try:
            inv = sympy.Matrix(self.entries.tolist()).inv_mod(self.modulus)
        except ValueError:
            raise HamCayleyError("action matrix is not invertible")
        return ActionMatrix.from_rows(np.array(inv.tolist(), dtype=np.int64), self.modulus)

    def is_invertible(self) -> bool:
        if not self.is_square:
            return False
        det = int(sympy.Matrix(self.entries.tolist()).det())
        return det % self.modulus != 0

    def multiplicative_order(self, limit: int = 10_000) -> int:
        acc = self
        for n in range(1, limit + 1):
            if acc.is_identity():
                return n
            acc = acc @ self
        raise HamCayleyError(f"action matrix has no order up to {limit}")

    def evaluate_poly(self, coeffs: Sequence[int]) -> ActionMatrix:
        """Horner evaluation; ``coeffs`` runs from the leading coefficient down."""
        acc = np.zeros_like(self.entries)
        eye = np.eye(self.size, dtype=np.int64)
        for c in coeffs:
            acc = (acc @ self.entries + c * eye) % self.modulus
        return ActionMatrix.from_rows(acc, self.modulus)

    def is_zero(self) -> bool:
        return not self.entries.any()


def companion(coeffs: Sequence[int], modulus: int = 2) -> ActionMatrix:
    """Companion matrix of a monic polynomial in the row convention.

    Basis ``v, v^x, v^{x^2}, ...``: each basis vector maps to the next and the last
    maps to ``-(c_0 + c_1 v^x + ...)``.
    """
    degree = len(coeffs) - 1
    rows = np.zeros((degree, degree), dtype=np.int64)
    for i in range(degree - 1):
        rows[i, i + 1] = 1
    low_first = list(reversed(coeffs))[:-1]
    rows[degree - 1] = [(-c) % modulus for c in low_first]
    return ActionMatrix.from_rows(rows, modulus)


def _proper_divisors(coeffs: Sequence[int], modulus: int) -> list[list[int]]:
    lam = sympy.Symbol("lam")
    poly = sympy.Poly(list(coeffs), lam, modulus=modulus)
    _, factors = poly.factor_list()
    divisors = []
    ranges = [range(mult + 1) for _, mult in factors]
    full = tuple(mult for _, mult in factors)
    for exps in product(*ranges):
        if exps == full:
            continue
        d = sympy.Poly(1, lam, modulus=modulus)
        for (f, _), e in zip(factors, exps):
            d = d * f**e
        divisors.append([int(c) % modulus for c in d.monic().all_coeffs()])
    return divisors


def companion_action_check(M: ActionMatrix, minpoly: Sequence[int]) -> bool:
    """True iff ``minpoly`` annihilates ``M`` and no proper divisor of it does."""
    if not M.is_square:
        raise DimensionMismatchError(f"matrix is {M.entries.shape[0]}×{M.entries.shape[1]}")
    if len(minpoly) - 1 > M.size:
        raise DimensionMismatchError(
            f"degree {len(minpoly) - 1} polynomial cannot be minimal for a {M.size}×{M.size} matrix"
        )
    if not M.evaluate_poly(minpoly).is_zero():
        return False
    return not any(M.evaluate_poly(d).is_zero() for d in _proper_divisors(minpoly, M.modulus))
