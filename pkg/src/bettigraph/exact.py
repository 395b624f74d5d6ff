"""Exact rational matrices and the closed-form matrices used throughout.

Scalars are :class:`fractions.Fraction`; a :class:`Matrix` is an immutable
row-major table of them.  Indices are 1-based in messages and docstrings,
0-based in storage.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from bettigraph.errors import RangeError

MAX_N = 25


def fmt_rational(x) -> str:
    """Serialize as ``p/q``, or ``p`` when the denominator is 1."""
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _guard(n: int, lo: int = 1) -> None:
    if not isinstance(n, int) or n < lo:
        raise RangeError(f"size must be an integer >= {lo}, got {n!r}")
    if n > MAX_N:
        raise RangeError(f"size {n} exceeds the closed-form guard n <= {MAX_N}")


class Matrix:
    """Dense immutable matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        self._data = data
        self.rows = len(data)
        self.cols = ncols

    @classmethod
    def from_function(cls, rows: int, cols: int, f) -> "Matrix":
        """Build from ``f(i, j)`` with 1-based ``i, j``."""
        return cls([[f(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return self._data[i - 1][j - 1]

    def row(self, i: int) -> tuple[Fraction, ...]:
        """Row ``i`` (1-based)."""
        return self._data[i - 1]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j - 1] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if isinstance(other, Matrix):
            return self._data == other._data
        try:
            return self._data == Matrix(other)._data
        except (TypeError, ValueError, IndexError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(fmt_rational(x) for x in r) for r in self._data)
        return f"Matrix[{body}]"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.col(j) for j in range(1, other.cols + 1)]
        return Matrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                       for r in self._data], other.cols)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._data), self.rows) if self.cols else Matrix.zeros(0, self.rows)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._data for x in r)

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises ZeroDivisionError if singular."""
        if self.rows != self.cols:
            raise ValueError(f"matrix is not square ({self.rows}x{self.cols})")
        n = self.rows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)]
               for i, r in enumerate(self._data)]
        for c in range(n):
            p = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if p is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[p] = aug[p], aug[c]
            piv = aug[c][c]
            aug[c] = [x / piv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return Matrix([r[n:] for r in aug])


def vecmat(v: Sequence, m: Matrix) -> list[Fraction]:
    """Row vector times matrix."""
    if len(v) != m.rows:
        raise ValueError(f"length {len(v)} vector against {m.rows}x{m.cols} matrix")
    return [sum((Fraction(x) * m[i, j] for i, x in enumerate(v)), Fraction(0))
            for j in range(m.cols)]


def as_ints(v: Iterable[Fraction]) -> list[int] | None:
    """Integer list if every entry is integral, else None."""
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            return None
        out.append(x.numerator)
    return out


def solve(a: Matrix, b: Sequence) -> list[Fraction]:
    """Solve ``a x = b`` exactly for square nonsingular ``a``."""
    inv = a.inverse()
    return [sum((inv[i, j] * Fraction(b[j]) for j in range(a.cols)), Fraction(0))
            for i in range(a.rows)]


# -- closed forms -----------------------------------------------------------

def omega_matrix(n: int) -> Matrix:
    """Rows are the reduced Betti vectors of the pure diagrams pi((0,2,...,l+1))."""
    _guard(n)
    return Matrix.from_function(n, n, lambda i, j: j * comb(i + 1, j + 1))


def omega_inverse(n: int) -> Matrix:
    _guard(n)
    return Matrix.from_function(
        n, n, lambda i, j: Fraction(_sign(i - j) * comb(i + 1, j + 1), i))


def psi_matrix(n: int) -> Matrix:
    """Unimodular change of basis between Betti vectors and ALHCs."""
    _guard(n)
    return Matrix.from_function(n, n, lambda i, j: comb(i - 1, j - 1))


def psi_inverse(n: int) -> Matrix:
    _guard(n)
    return Matrix.from_function(n, n, lambda i, j: _sign(i - j) * comb(i - 1, j - 1))


def psi_omega_inverse_closed(n: int) -> Matrix:
    """Bidiagonal closed form of ``psi_matrix(n) @ omega_inverse(n)``."""
    _guard(n)

    def f(i, j):
        if i == j:
            return Fraction(1, i)
        if i == j + 1:
            return Fraction(-1, i)
        return 0

    return Matrix.from_function(n, n, f)


def lambda_matrix(n: int) -> Matrix:
    """(n-1) x n matrix with ones at (i, i) and (i, i+1).

    ``omega @ lambda_matrix(n)`` is ``[omega | 0] + [0 | omega]``.
    """
    _guard(n)
    return Matrix.from_function(n - 1, n, lambda i, j: int(j in (i, i + 1)))


def lambda_right_inverse(n: int) -> Matrix:
    _guard(n)
    return Matrix.from_function(n, n - 1, lambda i, j: _sign(i + j) if i <= j else 0)


def eta_vector(n: int) -> list[int]:
    """Binomial row ``[C(n,1), ..., C(n,n)]``."""
    if not isinstance(n, int) or n < 0:
        raise RangeError(f"size must be a non-negative integer, got {n!r}")
    if n > MAX_N:
        raise RangeError(f"size {n} exceeds the closed-form guard n <= {MAX_N}")
    return [comb(n, i) for i in range(1, n + 1)]
