"""Exact rational scalars and small dense matrices over them.

Everything here computes over ``fractions.Fraction``; nothing is ever
rounded.  The matrices involved stay tiny (a handful of rows), so the
solvers favour clarity over asymptotics.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import ParseError, SingularMatrixError

# Reduced numerator/denominator, positive denominator, 0/1 for zero: the
# stdlib Fraction maintains all of these on construction.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction, rejecting floats and other inexact types."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``num`` or ``num/den`` with a positive denominator.

    Input need not be reduced; the result always is.  Whitespace and
    decimal notation are rejected.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(f"not a rational: {text!r}")
    num, den = match.groups()
    return Fraction(int(num), int(den) if den else 1)


def format_rational(value: Fraction) -> str:
    """Canonical text form: plain integer, or ``num/den`` reduced."""
    return str(as_rational(value))


class Matrix:
    """Immutable dense matrix with Fraction entries, stored row-major.

    Value semantics: all operations return new matrices, none mutate.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(as_rational(e) for e in entries)
        if len(self.entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        ncols = len(cols)
        nrows = len(cols[0]) if ncols else 0
        if any(len(c) != nrows for c in cols):
            raise ValueError("ragged columns")
        return cls(nrows, ncols, [cols[j][i] for i in range(nrows) for j in range(ncols)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [Fraction(i == j) for i in range(n) for j in range(n)])

    def __getitem__(self, key) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                out.append(sum((left[k] * other[k, j] for k in range(self.cols)), Fraction(0)))
        return Matrix(self.rows, other.cols, out)

    def apply(self, vector: Sequence) -> tuple:
        """Matrix-vector product, returned as a tuple of Fractions."""
        vec = [as_rational(v) for v in vector]
        if len(vec) != self.cols:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} @ vector[{len(vec)}]")
        return tuple(
            sum((a * v for a, v in zip(self.row(i), vec)), Fraction(0))
            for i in range(self.rows)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


def solve_upper_triangular(u: Matrix, b: Sequence) -> tuple:
    """Back-substitution for an upper triangular system u @ x = b.

    Entries below the diagonal are ignored; the caller is responsible for
    passing a genuinely triangular matrix (permuting columns first when the
    original system is anti-triangular).  A zero on the diagonal raises
    SingularMatrixError.
    """
    if u.rows != u.cols:
        raise ValueError(f"matrix is not square: {u.rows}x{u.cols}")
    n = u.rows
    rhs = [as_rational(x) for x in b]
    if len(rhs) != n:
        raise ValueError(f"dimension mismatch: {n}x{n} system with vector[{len(rhs)}]")
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        pivot = u[i, i]
        if pivot == 0:
            raise SingularMatrixError(f"zero diagonal entry at row {i}")
        acc = rhs[i]
        for k in range(i + 1, n):
            acc -= u[i, k] * x[k]
        x[i] = acc / pivot
    return tuple(x)


def solve_general(a: Matrix, b: Sequence) -> tuple:
    """Exact Gaussian elimination with row pivoting on the first nonzero.

    Brute force on purpose: this is the reference route that structured
    solvers elsewhere in the package are checked against.
    """
    if a.rows != a.cols:
        raise ValueError(f"matrix is not square: {a.rows}x{a.cols}")
    n = a.rows
    rhs = [as_rational(x) for x in b]
    if len(rhs) != n:
        raise ValueError(f"dimension mismatch: {n}x{n} system with vector[{len(rhs)}]")
    aug = [list(a.row(i)) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        for r in range(col + 1, n):
            factor = aug[r][col] / aug[col][col]
            if factor == 0:
                continue
            for c in range(col, n + 1):
                aug[r][c] -= factor * aug[col][c]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = aug[i][n]
        for k in range(i + 1, n):
            acc -= aug[i][k] * x[k]
        x[i] = acc / aug[i][i]
    return tuple(x)


def solve_vandermonde_dual(nodes: Sequence, moments: Sequence) -> tuple:
    """Solve the dual Vandermonde system sum_j nodes[j]**i * w[j] = moments[i].

    Works through the Lagrange basis for the nodes: w[j] is the moment
    functional applied to the j-th basis polynomial, whose coefficients are
    obtained exactly by deflating the master product polynomial.  Distinct
    nodes are required.
    """
    xs = [as_rational(x) for x in nodes]
    ms = [as_rational(m) for m in moments]
    n = len(xs)
    if len(ms) != n:
        raise ValueError(f"dimension mismatch: {n} nodes with vector[{len(ms)}]")
    if len(set(xs)) != n:
        raise SingularMatrixError("repeated node")
    # master(x) = prod (x - x_k), coefficients ascending
    master = [Fraction(1)]
    for x in xs:
        master = [Fraction(0)] + master
        for i in range(len(master) - 1):
            master[i] -= x * master[i + 1]
    weights = []
    for xj in xs:
        # deflate by (x - xj): synthetic division, remainder is zero
        q = [Fraction(0)] * n
        q[n - 1] = master[n]
        for i in range(n - 1, 0, -1):
            q[i - 1] = master[i] + xj * q[i]
        denom = Fraction(0)
        power = Fraction(1)
        for c in q:
            denom += c * power
            power *= xj
        weights.append(sum((c * m for c, m in zip(q, ms)), Fraction(0)) / denom)
    return tuple(weights)
