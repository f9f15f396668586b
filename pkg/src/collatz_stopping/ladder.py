"""Exact per-level constants of the stopping-time structure.

Everything here compares powers of 2 and 3 as big integers.  Floating-point
logarithms are never used: near n = 40 the operands leave the double range
and floor(n * log2(3)) computed in doubles starts to drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class LadderRow:
    """The constants attached to one level n."""

    n: int
    d: int
    kappa: int
    sigma: int


@lru_cache(maxsize=None)
def kappa(n: int) -> int:
    """Greatest k with 2^k < 3^n; kappa(0) = 0.

    3^n is never a power of two, so the bit length b of 3^n satisfies
    2^(b-1) < 3^n < 2^b exactly, giving kappa(n) = b - 1.
    """
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    if n == 0:
        return 0
    return (3**n).bit_length() - 1


def sigma_n(n: int) -> int:
    """Stopping time of every starting value whose stopping prefix contains
    n odd terms after the first: kappa(n+1) + 1."""
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    return kappa(n + 1) + 1


def d(n: int) -> int:
    """kappa(n) - kappa(n-1): the number of powers of 2 strictly between
    3^(n-1) and 3^n.  Always 1 or 2."""
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    gap = kappa(n) - kappa(n - 1)
    assert gap in (1, 2)
    return gap


@lru_cache(maxsize=None)
def min_surviving_n(k: int) -> int:
    """Smallest n with 2^k < 3^n, i.e. 1 + max{m : 3^m < 2^k}.

    This is the leftmost populated column of row k of the count triangle:
    a residue (mod 2^k) with fewer odd steps has already stopped.
    """
    if k < 1:
        raise ValueError(f"bit depth must be >= 1, got {k}")
    m, p = 0, 1
    lim = 1 << k
    while 3 * p < lim:
        p *= 3
        m += 1
    return m + 1


def ladder_rows(max_n: int) -> list[LadderRow]:
    """Rows (n, d(n), kappa(n), sigma_n(n)) for n = 1..max_n."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    return [LadderRow(n, d(n), kappa(n), sigma_n(n)) for n in range(1, max_n + 1)]
