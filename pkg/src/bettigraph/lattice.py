"""The simplices P_n (Betti vectors) and Q_n (ALHCs): lattice points, Ehrhart
counts, truncated coordinates and the reflexive dual.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Sequence

from bettigraph.alhc import alhc_to_omega, iter_alhc
from bettigraph.errors import RangeError, ValidationError
from bettigraph.exact import Matrix, eta_vector, omega_matrix, solve

DILATION_MAX = 8
DUAL_MAX = 12
INTERIOR_MAX = 6


def lattice_points_dilation(n: int, t: int, coords: str = "alhc") -> list[tuple[int, ...]]:
    """Lattice points of ``t Q_n`` (ALHCs with ``l_1 = t``), sorted.

    ``coords="omega"`` maps them through ``Psi`` onto ``t P_n``.
    """
    if not (1 <= n <= DILATION_MAX and 0 <= t <= DILATION_MAX):
        raise RangeError(f"dilation guard: 1 <= n <= {DILATION_MAX}, t <= {DILATION_MAX}")
    pts = list(iter_alhc(n, t, first=t))
    if coords == "omega":
        pts = sorted(tuple(alhc_to_omega(p)) for p in pts)
    elif coords != "alhc":
        raise ValidationError(f"unknown coordinate system {coords!r}")
    return pts


@dataclass(frozen=True)
class EhrhartReport:
    n: int
    t: int
    count: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.count == self.expected

    def to_json(self) -> dict:
        return {"n": self.n, "t": self.t, "count": self.count,
                "expected": self.expected, "pass": self.passed}


def ehrhart_check(n: int, t: int) -> EhrhartReport:
    count = len(lattice_points_dilation(n, t))
    return EhrhartReport(n, t, count, (t + 1) ** n - t ** n)


def truncate(p: Sequence[int]) -> tuple[int, ...]:
    """Subtract ``eta_n`` and drop the first coordinate."""
    n = len(p)
    if n < 2:
        raise ValidationError("truncation needs a point of length >= 2")
    return tuple(x - e for x, e in zip(p[1:], eta_vector(n)[1:]))


def truncated_vertices(n: int) -> Matrix:
    """Vertices of P_n in truncated coordinates, one per row (n x (n-1))."""
    om = omega_matrix(n)
    return Matrix([truncate([int(x) for x in om.row(i)]) for i in range(1, n + 1)], n - 1)


def _dual_guard(n: int) -> None:
    if not (isinstance(n, int) and 2 <= n <= DUAL_MAX):
        raise RangeError(f"dual guard: 2 <= n <= {DUAL_MAX}")


@dataclass(frozen=True)
class DualReport:
    n: int
    xi: Matrix
    product: Matrix

    @property
    def integral(self) -> bool:
        return self.xi.is_integral()

    @property
    def off_diagonal_ok(self) -> bool:
        return all(self.product[i, j] == -1 for i in range(self.n)
                   for j in range(self.n) if i != j)

    @property
    def diagonal(self) -> list[Fraction]:
        return [self.product[i, i] for i in range(self.n)]


def reflexive_dual(n: int) -> DualReport:
    """Solve ``v_i . c_j = -1`` (``i != j``) exactly for the dual vertex columns."""
    _dual_guard(n)
    verts = truncated_vertices(n)
    cols = []
    for j in range(n):
        a = Matrix([verts.row(i + 1) for i in range(n) if i != j], n - 1)
        try:
            cols.append(solve(a, [-1] * (n - 1)))
        except ZeroDivisionError:
            raise RuntimeError(f"degenerate simplex at n={n}, facet {j + 1}") from None
    xi = Matrix(zip(*cols), n) if n > 1 else Matrix.zeros(0, n)
    return DualReport(n, xi, verts @ xi)


def closed_form_xi(n: int) -> Matrix:
    """Closed-form dual, evaluated literally as the sum of three matrices:
    ``-(i+2)(-1)^{i+j} C(i, j-1)``, a first column ``-2(-1)^i``, and
    ``1 - n`` in the bottom-right corner."""
    _dual_guard(n)

    def f(i, j):
        x = -(i + 2) * (-1 if (i + j) % 2 else 1) * comb(i, j - 1)
        if j == 1:
            x += -2 * (-1 if i % 2 else 1)
        if i == n - 1 and j == n:
            x += 1 - n
        return x

    return Matrix.from_function(n - 1, n, f)


@dataclass(frozen=True)
class DualComparison:
    n: int
    solved: DualReport
    formula: Matrix
    formula_product: Matrix
    differences: list  # (i, j, solved, formula), 1-based

    def to_json(self) -> dict:
        s = self.solved
        return {
            "n": self.n,
            "xi_solved": [[str(x) for x in r] for r in s.xi],
            "xi_formula": [[str(x) for x in r] for r in self.formula],
            "integral": s.integral,
            "off_diagonal_minus_one": s.off_diagonal_ok,
            "diagonal_solved": [str(x) for x in s.diagonal],
            "diagonal_formula": [str(self.formula_product[i, i]) for i in range(self.n)],
            "discrepancies": [{"row": i, "col": j, "solved": str(a), "formula": str(b)}
                              for i, j, a, b in self.differences],
        }


def compare_duals(n: int) -> DualComparison:
    solved = reflexive_dual(n)
    formula = closed_form_xi(n)
    diffs = [(i + 1, j + 1, solved.xi[i, j], formula[i, j])
             for i in range(n - 1) for j in range(n) if solved.xi[i, j] != formula[i, j]]
    return DualComparison(n, solved, formula, truncated_vertices(n) @ formula, diffs)


# -- interior lattice points ---------------------------------------------------

@dataclass(frozen=True)
class InteriorReport:
    n: int
    points: int
    interior: list
    origin_barycentric: tuple

    @property
    def ok(self) -> bool:
        return self.interior == [(0,) * (self.n - 1)]


def _barycentric_forms(verts: Matrix) -> tuple[list[list[int]], list[int], int]:
    """Integer affine forms ``B_j(x) = sum_k a[k][j] x_k + a0[j]`` with
    barycentric coordinate ``b_j = B_j / den``."""
    n = verts.rows
    m = Matrix([list(verts.row(i + 1)) + [1] for i in range(n)])
    inv = m.inverse()
    den = lcm(*(x.denominator for r in inv for x in r))
    a = [[int(inv[k, j] * den) for j in range(n)] for k in range(n - 1)]
    a0 = [int(inv[n - 1, j] * den) for j in range(n)]
    return a, a0, den


def lattice_points_truncated(n: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """All lattice points of truncated P_n by a pruned bounding-box scan.

    Returns ``(points, interior_points)``.
    """
    if not (2 <= n <= INTERIOR_MAX):
        raise RangeError(f"interior guard: 2 <= n <= {INTERIOR_MAX}")
    d = n - 1
    full = truncated_vertices(n)
    # scan narrow coordinates first; the widest ones are then pinned by intervals
    width = [max(full.col(k + 1)) - min(full.col(k + 1)) for k in range(d)]
    perm = sorted(range(d), key=lambda k: (width[k], k))
    verts = Matrix([[r[k] for k in perm] for r in full], d)
    lo = [int(min(verts.col(k + 1))) for k in range(d)]
    hi = [int(max(verts.col(k + 1))) for k in range(d)]
    a, a0, _ = _barycentric_forms(verts)
    # best case each form can still reach from coordinates k.. onwards
    slack = [[0] * n for _ in range(d + 1)]
    for k in range(d - 1, -1, -1):
        for j in range(n):
            slack[k][j] = slack[k + 1][j] + max(a[k][j] * lo[k], a[k][j] * hi[k])
    points, interior = [], []
    x = [0] * d

    def rec(k: int, partial: list[int]) -> None:
        if k == d:
            pt = [0] * d
            for pos, k0 in enumerate(perm):
                pt[k0] = x[pos]
            points.append(tuple(pt))
            if all(p > 0 for p in partial):
                interior.append(tuple(pt))
            return
        # interval of x_k for which every form can still end up >= 0
        vlo, vhi = lo[k], hi[k]
        for j in range(n):
            c = a[k][j]
            need = -(partial[j] + slack[k + 1][j])
            if c > 0:
                vlo = max(vlo, -(-need // c))
            elif c < 0:
                vhi = min(vhi, need // c)
            elif need > 0:
                return
        for v in range(vlo, vhi + 1):
            x[k] = v
            rec(k + 1, [partial[j] + a[k][j] * v for j in range(n)])

    rec(0, list(a0))
    return sorted(points), sorted(interior)


def interior_point_check(n: int) -> InteriorReport:
    points, interior = lattice_points_truncated(n)
    verts = truncated_vertices(n)
    m = Matrix([[verts[i, k] for i in range(n)] for k in range(n - 1)] + [[1] * n])
    bary = tuple(solve(m, [0] * (n - 1) + [1]))
    return InteriorReport(n, len(points), interior, bary)
