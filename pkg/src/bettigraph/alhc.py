"""Anti-lecture hall compositions (ALHCs) and module decompositions.

An ALHC of length n bounded by t is an integer vector with
``t >= l_1/1 >= l_2/2 >= ... >= l_n/n >= 0``.  The change of basis
``omega = lambda . Psi`` with ``Psi[i][j] = C(i-1, j-1)`` carries Betti
vectors of 2-linear quotients onto the ALHCs with ``l_1 = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from bettigraph.errors import NotInCone, RangeError, ValidationError
from bettigraph.exact import MAX_N
from bettigraph.threshold import omega_to_threshold, threshold_omega

COUNT_MAX_N = 12
COUNT_MAX_T = 8


def is_alhc(lam: Sequence[int], t: int) -> bool:
    if any(not isinstance(x, int) for x in lam):
        return False
    if not lam:
        return t >= 0
    if lam[0] > t or lam[-1] < 0:
        return False
    # l_i / i >= l_{i+1} / (i+1), cross-multiplied
    return all(lam[i - 1] * (i + 1) >= lam[i] * i for i in range(1, len(lam)))


def _check_len(v: Sequence[int]) -> None:
    if len(v) > MAX_N:
        raise RangeError(f"length {len(v)} exceeds {MAX_N}")


def omega_to_lambda(omega: Sequence[int]) -> list[int]:
    """``omega . Psi^{-1}``."""
    _check_len(omega)
    n = len(omega)
    return [sum(omega[i - 1] * (-1 if (i - j) % 2 else 1) * comb(i - 1, j - 1)
                for i in range(j, n + 1)) for j in range(1, n + 1)]


def alhc_to_omega(lam: Sequence[int]) -> list[int]:
    """``lambda . Psi``."""
    _check_len(lam)
    n = len(lam)
    return [sum(lam[i - 1] * comb(i - 1, j - 1) for i in range(j, n + 1))
            for j in range(1, n + 1)]


@dataclass(frozen=True)
class ALHCImage:
    lam: tuple[int, ...]
    valid: bool  # an ALHC bounded by 1 with l_1 = 1, i.e. a lattice point of P_n

    def __str__(self) -> str:
        return ",".join(map(str, self.lam))


def omega_to_alhc(omega: Sequence[int]) -> ALHCImage:
    lam = omega_to_lambda(omega)
    return ALHCImage(tuple(lam), bool(lam) and lam[0] == 1 and is_alhc(lam, 1))


def iter_alhc(n: int, t: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """All ALHCs of length ``n`` bounded by ``t`` (optionally with ``l_1 = first``),
    in lexicographic order."""
    if n == 0:
        yield ()
        return
    cur = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(cur)
            return
        hi = (i + 1) * cur[i - 1] // i
        for x in range(hi + 1):
            cur[i] = x
            yield from rec(i + 1)

    firsts = range(t + 1) if first is None else ([first] if 0 <= first <= t else [])
    for f in firsts:
        cur[0] = f
        yield from rec(1)


def count_alhc(n: int, t: int) -> int:
    """Number of ALHCs of length ``n`` bounded by ``t``.

    Counts every admissible prefix exactly, memoised on the last entry.
    """
    if not (0 <= n <= COUNT_MAX_N and 0 <= t <= COUNT_MAX_T):
        raise RangeError(f"count_alhc guard: n <= {COUNT_MAX_N}, t <= {COUNT_MAX_T}")
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def completions(i: int, last: int) -> int:
        # entries 1..i fixed, entry i equals `last`
        if i == n:
            return 1
        return sum(completions(i + 1, x) for x in range((i + 1) * last // i + 1))

    return sum(completions(1, f) for f in range(t + 1))


# -- module decomposition -------------------------------------------------------

def _split_off(lam: Sequence[int], m: int, stats: dict) -> tuple[int, ...] | None:
    """Find ``mu`` with ``mu_1 = 1`` an ALHC and ``lam - mu`` an ALHC with first
    entry ``m - 1``.  Depth-first, largest ``mu_i`` first."""
    n = len(lam)
    mu = [0] * n
    mu[0] = 1

    def rec(i: int) -> bool:
        if i == n:
            return True
        nu_prev = lam[i - 1] - mu[i - 1]
        hi = min((i + 1) * mu[i - 1] // i, lam[i])
        lo = max(0, lam[i] - (i + 1) * nu_prev // i)
        for x in range(hi, lo - 1, -1):
            mu[i] = x
            if rec(i + 1):
                return True
        stats["backtracks"] = stats.get("backtracks", 0) + 1
        return False

    return tuple(mu) if rec(1) else None


def decompose_module(omega: Sequence[int], m: int, stats: dict | None = None) -> list[str]:
    """Split ``omega`` into ``m`` threshold Betti vectors.

    Works in ALHC coordinates: ``lambda = omega . Psi^{-1}`` must be an ALHC
    bounded by ``m`` with ``l_1 = m``; summands with first entry 1 are split
    off one at a time.  The result is re-summed against ``omega`` before it
    is returned.
    """
    if stats is None:
        stats = {}
    omega = [int(x) for x in omega]
    if not omega:
        raise ValidationError("omega must have length >= 1")
    if not isinstance(m, int) or m < 1:
        raise ValidationError("m must be a positive integer")
    lam = omega_to_lambda(omega)
    if lam[0] != m or not is_alhc(lam, m):
        raise NotInCone(f"{omega} is not the reduced Betti vector of a module with "
                        f"beta_00 = {m} and a 2-linear resolution (lambda = {lam})")
    parts: list[tuple[int, ...]] = []
    rest = list(lam)
    for left in range(m, 1, -1):
        mu = _split_off(rest, left, stats)
        if mu is None:
            # unreachable while the simplex is normal
            raise RuntimeError(f"no summand found for lambda = {rest}")
        parts.append(mu)
        rest = [a - b for a, b in zip(rest, mu)]
    parts.append(tuple(rest))
    words = [omega_to_threshold(alhc_to_omega(p)) for p in parts]
    total = [0] * len(omega)
    for w in words:
        total = [a + b for a, b in zip(total, threshold_omega(w))]
    if total != omega:
        raise AssertionError(f"decomposition of {omega} re-sums to {total}")
    return words
