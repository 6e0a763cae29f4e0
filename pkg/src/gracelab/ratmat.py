"""Exact rational matrices: fraction-free determinant and Gauss-Jordan inverse."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainSizeError, PremiseError, SingularMatrixError
from .transform import Transformation, adjacency_matrix, is_semigroup_member, square


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise DomainSizeError("RationalMatrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other):
        if self.n != other.n:
            raise DomainSizeError(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    def __add__(self, other):
        self._check(other)
        return RationalMatrix(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        self._check(other)
        return RationalMatrix(tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __matmul__(self, other):
        self._check(other)
        cols = list(zip(*other.rows))
        return RationalMatrix(tuple(
            tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
            for r in self.rows))

    def apply(self, vec: Sequence) -> tuple:
        return tuple(sum((a * Fraction(v) for a, v in zip(r, vec)), Fraction(0)) for r in self.rows)

    def determinant(self) -> Fraction:
        """Bareiss elimination after clearing denominators."""
        n = self.n
        if n == 0:
            return Fraction(1)
        scale = 1
        for r in self.rows:
            for v in r:
                scale = scale * v.denominator // _gcd(scale, v.denominator)
        ints = [[int(v * scale) for v in r] for r in self.rows]
        return Fraction(bareiss_determinant(ints), scale ** n)

    def inverse(self) -> "RationalMatrix":
        n = self.n
        a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular", self.determinant())
            a[col], a[pivot] = a[pivot], a[col]
            p = a[col][col]
            a[col] = [v / p for v in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    m = a[r][col]
                    a[r] = [v - m * w for v, w in zip(a[r], a[col])]
        return RationalMatrix(tuple(tuple(r[n:]) for r in a))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def bareiss_determinant(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix (every division is exact)."""
    a = [list(map(int, r)) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _int_matrix(arr) -> RationalMatrix:
    return RationalMatrix(tuple(tuple(int(v) for v in row) for row in arr))


def a_plus_i(f: Transformation) -> RationalMatrix:
    return _int_matrix(adjacency_matrix(f)) + RationalMatrix.identity(f.n)


def a_minus_i(f: Transformation) -> RationalMatrix:
    return _int_matrix(adjacency_matrix(f)) - RationalMatrix.identity(f.n)


def inverse_a_plus_i(f: Transformation) -> RationalMatrix:
    """Exact (A_f + I)^-1; semigroup members additionally assert det == 2."""
    m = a_plus_i(f)
    det = bareiss_determinant([[int(v) for v in r] for r in m.rows])
    if det == 0:
        raise SingularMatrixError(f"A+I is singular for f={f}", det)
    if is_semigroup_member(f) and det != 2:
        raise AssertionError(f"det(A+I)={det} for semigroup member {f}")
    return m.inverse()


def det_a_plus_i(f: Transformation) -> int:
    return bareiss_determinant(adjacency_matrix(f) + np.eye(f.n, dtype=np.int64))


def substitution_transform_check(f: Transformation) -> bool:
    """(A_{f^2} - I)(A_f + I)^-1 == A_f - I exactly."""
    if not is_semigroup_member(f):
        raise PremiseError(f"{f} is not a semigroup member")
    lhs = a_minus_i(square(f)) @ inverse_a_plus_i(f)
    return lhs == a_minus_i(f)
