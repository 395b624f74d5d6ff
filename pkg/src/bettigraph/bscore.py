"""Pure diagrams and the Boij-Soederberg decomposition of 2-linear diagrams."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from bettigraph.errors import ValidationError
from bettigraph.exact import fmt_rational, omega_inverse, vecmat


@dataclass(frozen=True)
class BettiDiagram:
    """Sparse graded Betti table ``(i, j) -> beta_{i,j}``; zeros omitted."""

    entries: dict = field(default_factory=dict)

    @classmethod
    def from_omega(cls, omega: Sequence[int], m: int = 1) -> "BettiDiagram":
        """2-linear diagram with ``beta_{0,0} = m`` and second row ``omega``."""
        ent = {(0, 0): Fraction(m)} if m else {}
        for i, b in enumerate(omega, start=1):
            if b:
                ent[(i, i + 1)] = Fraction(b)
        return cls(ent)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.entries.get(ij, Fraction(0))

    @property
    def beta00(self) -> Fraction:
        return self[0, 0]

    def reduced(self, n: int | None = None) -> list[Fraction]:
        """Second row ``[beta_{1,2}, ..., beta_{n,n+1}]``."""
        if n is None:
            n = max((i for i, j in self.entries if j - i == 1), default=0)
        return [self[i, i + 1] for i in range(1, n + 1)]

    def is_pure(self) -> bool:
        cols = [i for i, _ in self.entries]
        return len(cols) == len(set(cols))

    def table(self) -> list[list[Fraction]]:
        """Rows indexed by ``j - i``, columns by ``i``."""
        if not self.entries:
            return [[Fraction(0)]]
        ncol = max(i for i, _ in self.entries) + 1
        nrow = max(j - i for i, j in self.entries) + 1
        return [[self[i, i + r] for i in range(ncol)] for r in range(nrow)]

    def format(self) -> str:
        rows = [[fmt_rational(x) if x else "." for x in r] for r in self.table()]
        width = max(len(s) for r in rows for s in r)
        return "\n".join(" ".join(s.rjust(width) for s in r) for r in rows)

    def __add__(self, other: "BettiDiagram") -> "BettiDiagram":
        ent = dict(self.entries)
        for k, v in other.entries.items():
            ent[k] = ent.get(k, 0) + v
        return BettiDiagram({k: v for k, v in ent.items() if v})

    def scale(self, c) -> "BettiDiagram":
        c = Fraction(c)
        return BettiDiagram({k: v * c for k, v in self.entries.items() if v * c})


def pure_diagram(d: Sequence[int]) -> BettiDiagram:
    """The pure diagram of a strictly increasing degree sequence ``d``.

    Entry ``(i, d_i)`` is the product over ``k != 0, i`` of
    ``|(d_k - d_0) / (d_k - d_i)|``.
    """
    d = list(d)
    if not d:
        raise ValidationError("degree sequence must be nonempty")
    if any(not isinstance(x, int) or x < 0 for x in d):
        raise ValidationError(f"degrees must be non-negative integers: {d}")
    if any(a >= b for a, b in zip(d, d[1:])):
        raise ValidationError(f"degree sequence must be strictly increasing: {d}")
    ent = {}
    for i, di in enumerate(d):
        val = Fraction(1)
        for k, dk in enumerate(d):
            if k not in (0, i):
                val *= abs(Fraction(dk - d[0], dk - di))
        if val:
            ent[(i, di)] = val
    return BettiDiagram(ent)


def linear_degree_sequence(l: int) -> tuple[int, ...]:
    """``(0, 2, 3, ..., l+1)``: the degree sequences of 2-linear pure diagrams."""
    return (0,) + tuple(range(2, l + 2))


@dataclass(frozen=True)
class BSCoefficients:
    c: tuple[Fraction, ...]
    m: int

    @property
    def nonneg(self) -> bool:
        return all(x >= 0 for x in self.c)

    @property
    def total(self) -> Fraction:
        return sum(self.c, Fraction(0))

    @property
    def sums_to_m(self) -> bool:
        return self.total == self.m

    @property
    def admissible(self) -> bool:
        return self.nonneg and self.sums_to_m

    def to_json(self, omega: Sequence[int]) -> dict:
        return {"beta00": self.m, "omega": list(omega),
                "c": [fmt_rational(x) for x in self.c]}


def bs_decompose(omega: Sequence[int], m: int = 1) -> BSCoefficients:
    """Coefficients ``c = omega . Omega^{-1}`` on the pure diagrams ``pi^l``.

    Never rejects; check :attr:`BSCoefficients.admissible`.
    """
    if len(omega) == 0:
        raise ValidationError("omega must have length >= 1")
    if m < 1:
        raise ValidationError("beta_00 must be positive")
    c = vecmat(list(omega), omega_inverse(len(omega)))
    return BSCoefficients(tuple(c), m)


@dataclass(frozen=True)
class Certificate:
    admissible: bool
    reason: str | None
    c: tuple[Fraction, ...]

    def __str__(self) -> str:
        return "Admissible" if self.admissible else f"Inadmissible({self.reason})"


def chordality_certificate(omega: Sequence[int]) -> Certificate:
    """Test whether ``omega`` decomposes with nonnegative weights summing to 1.

    Failure certifies that a graph with this Froberg vector is not chordal.
    A negative coefficient is reported ahead of a wrong sum.
    """
    bs = bs_decompose(omega, 1)
    if not bs.nonneg:
        return Certificate(False, "negative-coefficient", bs.c)
    if not bs.sums_to_m:
        return Certificate(False, "wrong-sum", bs.c)
    return Certificate(True, None, bs.c)
