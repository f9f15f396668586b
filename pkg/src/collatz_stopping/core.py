"""The accelerated 3x+1 map and its exact trajectory bookkeeping.

All functions are pure and use Python's arbitrary-precision integers, so
there is no overflow at any input size and concurrent calls are safe.
"""

from __future__ import annotations

from .ladder import kappa

Bits = tuple[int, ...]


def t_step(x: int) -> int:
    """One map application: x/2 for even x, (3x+1)/2 for odd x."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    return x // 2 if x % 2 == 0 else (3 * x + 1) // 2


def trajectory(x: int, steps: int) -> list[int]:
    """The terms T^0(x) .. T^steps(x), length steps + 1."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    terms = [x]
    t = x
    for _ in range(steps):
        t = t // 2 if t % 2 == 0 else (3 * t + 1) // 2
        terms.append(t)
    return terms


def stopping_time(x: int, cap: int) -> int | None:
    """Least s with T^s(x) < x, or None when not reached within cap steps.

    None is the explicit "unknown" outcome: a hypothetical divergent orbit
    exhausts the budget instead of looping forever.  x = 1 is excluded
    (T(1) = 2 never drops below 1).
    """
    if x < 2:
        raise ValueError(f"stopping time is undefined for x < 2, got {x}")
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    t = x
    for s in range(1, cap + 1):
        t = t // 2 if t % 2 == 0 else (3 * t + 1) // 2
        if t < x:
            return s
    return None


def parity_vector_of(x: int, n: int) -> Bits:
    """Parities of T^0(x) .. T^kappa(n)(x), a 0/1 tuple of length kappa(n)+1."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    bits = []
    t = x
    for _ in range(kappa(n) + 1):
        bits.append(t & 1)
        t = t // 2 if t % 2 == 0 else (3 * t + 1) // 2
    return tuple(bits)


def forward_map(r: int, k: int) -> tuple[int, int]:
    """Push the residue r through k steps: (q, n) with q = T^k(r) and n the
    number of odd terms among T^0(r) .. T^(k-1)(r).

    For every m >= 0, T^k(r + m*2^k) = q + m*3^n: the whole class r (mod 2^k)
    shares the parity prefix, so the class moves rigidly onto q (mod 3^n).
    """
    if k < 1:
        raise ValueError(f"step count must be >= 1, got {k}")
    if not 0 <= r < (1 << k):
        raise ValueError(f"residue must satisfy 0 <= r < 2^{k}, got {r}")
    t, n = r, 0
    for _ in range(k):
        if t & 1:
            t = (3 * t + 1) // 2
            n += 1
        else:
            t //= 2
    return t, n
