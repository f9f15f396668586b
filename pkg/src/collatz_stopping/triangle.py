"""The survivor-count triangle.

R(k, n) counts the residues (mod 2^k) that are still unstopped after k steps
and whose k-step image lies in a class mod 3^n.  Doubling a surviving class
splits it into one class that takes an even step and one that takes an odd
step, hence the Pascal-like recurrence

    R(k+1, n) = R(k, n) + R(k, n-1),    seed R(2, 2) = 1,

with cells existing only while 2^k < 3^n (stopped classes leave the pool).
Row sums give the surviving-residue counts w(k); column sums give the class
counts z(n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ladder import kappa, min_surviving_n


@dataclass(frozen=True)
class TriangleTable:
    """Sparse triangle keyed by (k, n); missing cells are zero by the cut rule."""

    max_n: int
    cells: dict[tuple[int, int], int]

    def cell(self, k: int, n: int) -> int:
        return self.cells.get((k, n), 0)


def build_triangle(max_n: int) -> TriangleTable:
    """Populate columns 2..max_n; column n holds rows k = n .. kappa(n)."""
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    cells: dict[tuple[int, int], int] = {}
    for n in range(2, max_n + 1):
        for k in range(n, kappa(n) + 1):
            if k == 2 and n == 2:
                cells[(2, 2)] = 1
            else:
                cells[(k, n)] = cells.get((k - 1, n), 0) + cells.get((k - 1, n - 1), 0)
    return TriangleTable(max_n=max_n, cells=cells)


def w(table: TriangleTable, k: int) -> int:
    """Number of surviving residues (mod 2^k): the row-k sum over columns
    n = min_surviving_n(k) .. k."""
    if k < 2:
        raise ValueError(f"row must be >= 2, got {k}")
    if k > table.max_n:
        raise ValueError(f"row {k} not covered by a table built to max_n={table.max_n}")
    return sum(table.cells.get((k, n), 0) for n in range(min_surviving_n(k), k + 1))


def z_from_triangle(table: TriangleTable, n: int) -> int:
    """Number of residue classes with stopping time sigma_n: the column-n sum
    over rows k = n .. kappa(n)."""
    if n < 2:
        raise ValueError(f"column must be >= 2, got {n}")
    if n > table.max_n:
        raise ValueError(f"column {n} not covered by a table built to max_n={table.max_n}")
    return sum(table.cells[(k, n)] for k in range(n, kappa(n) + 1))
