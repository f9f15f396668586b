"""Parity-vector level sets generated by the three-step tree construction.

Level 1 is the single vector (1, 1).  Level n grows out of level n-1 in the
order the construction emits vectors:

  step 1  extend each level-(n-1) vector on the right with "1" when d(n) = 1
          and with "0, 1" when d(n) = 2;
  step 2  while the freshly emitted vector has a 0 immediately left of its
          final 1, emit a copy with that 1 moved one position left;
  step 3  the level closes once the vector with n+1 leading ones followed by
          all zeros has been emitted.

Emission order is the contract: per-h ranks p, the candidate-tuple ordering
and the residue recurrences all refer to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import Bits
from .ladder import d, kappa
from .triangle import build_triangle, z_from_triangle


@dataclass(frozen=True)
class VSetEntry:
    """One generated vector with its labels and provenance.

    h is the count of leading consecutive 1s, p the 1-based rank within the
    equal-h group in emission order.  parent is ("step1", i) pointing into
    level n-1, ("step2", i) pointing at the immediately preceding entry of
    the same level, or None for the root.
    """

    vector: Bits
    n: int
    h: int
    p: int
    parent: tuple[str, int] | None


ROOT = VSetEntry(vector=(1, 1), n=1, h=2, p=1, parent=None)


def leading_ones(bits: Bits) -> int:
    h = 0
    for b in bits:
        if b != 1:
            break
        h += 1
    return h


def trailing_zeros(bits: Bits) -> int:
    j = 0
    for b in reversed(bits):
        if b != 0:
            break
        j += 1
    return j


def _extend_level(prev: list[VSetEntry], n: int) -> list[VSetEntry]:
    suffix = (1,) if d(n) == 1 else (0, 1)
    terminal = (1,) * (n + 1) + (0,) * (kappa(n) - n)
    raw: list[tuple[Bits, tuple[str, int]]] = []
    for pi, entry in enumerate(prev):
        child = entry.vector + suffix
        raw.append((child, ("step1", pi)))
        cur = list(child)
        pos = len(cur) - 1
        while pos >= 1 and cur[pos - 1] == 0:
            cur[pos - 1], cur[pos] = 1, 0
            pos -= 1
            raw.append((tuple(cur), ("step2", len(raw) - 1)))
        if raw[-1][0] == terminal:
            break
    assert raw[-1][0] == terminal, "level did not close on the all-leading-ones vector"
    out = []
    per_h: dict[int, int] = {}
    for vec, parent in raw:
        h = leading_ones(vec)
        per_h[h] = per_h.get(h, 0) + 1
        out.append(VSetEntry(vector=vec, n=n, h=h, p=per_h[h], parent=parent))
    return out


def vset_levels(n_max: int) -> dict[int, list[VSetEntry]]:
    """Levels 1..n_max, each in emission order."""
    if n_max < 1:
        raise ValueError(f"level must be >= 1, got {n_max}")
    levels = {1: [ROOT]}
    for n in range(2, n_max + 1):
        levels[n] = _extend_level(levels[n - 1], n)
    return levels


def generate_vset(n: int) -> list[VSetEntry]:
    """The level-n vector set in emission order."""
    return vset_levels(n)[n]


def phn_counts(n: int) -> dict[int, int]:
    """Histogram of leading-ones counts h over the level-n set."""
    counts: dict[int, int] = {}
    for entry in generate_vset(n):
        counts[entry.h] = counts.get(entry.h, 0) + 1
    return counts


def ln_count(n: int) -> int:
    """Number of candidate tuples at level n: C(kappa(n)-1, n-1), exact."""
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    return comb(kappa(n) - 1, n - 1)


def lex_tuples(n: int) -> list[Bits]:
    """Every candidate vector at level n in lexicographic order: two leading
    1s followed by each arrangement of (kappa(n)-n) zeros and (n-1) ones.

    Enumerating the zero positions with combinations() yields the bit tuples
    in ascending lexicographic order directly.
    """
    if n < 1:
        raise ValueError(f"level must be >= 1, got {n}")
    m = kappa(n) - 1
    zeros = kappa(n) - n
    out = []
    for zpos in combinations(range(m), zeros):
        tail = [1] * m
        for i in zpos:
            tail[i] = 0
        out.append((1, 1, *tail))
    return out


DEFAULT_MAX_NODES = 2000


class TreeSizeError(ValueError):
    """Raised instead of materializing an oversized export."""

    def __init__(self, node_count: int, max_nodes: int):
        self.node_count = node_count
        self.max_nodes = max_nodes
        super().__init__(
            f"export would generate {node_count} nodes, above the guard of {max_nodes}"
        )


def tree_node_count(n_lo: int, n_hi: int) -> int:
    """Node count of an export over levels n_lo..n_hi, without generating it."""
    if not 1 <= n_lo <= n_hi:
        raise ValueError(f"need 1 <= n_lo <= n_hi, got {n_lo}..{n_hi}")
    total = 1 if n_lo == 1 else 0
    if n_hi >= 2:
        table = build_triangle(n_hi)
        total += sum(z_from_triangle(table, n) for n in range(max(2, n_lo), n_hi + 1))
    return total


def export_tree(
    n_lo: int,
    n_hi: int,
    *,
    with_solutions: bool = False,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> str:
    """Graphviz DOT text of the generation tree restricted to levels n_lo..n_hi.

    Levels become same-rank columns; step-1 edges run between columns and
    step-2 edges run inside a column (drawn dashed).
    """
    count = tree_node_count(n_lo, n_hi)
    if count > max_nodes:
        raise TreeSizeError(count, max_nodes)
    levels = vset_levels(n_hi)
    solve = None
    if with_solutions:
        from .diophantine import solve_vector

        solve = solve_vector
    lines = [
        "digraph parity_vector_tree {",
        "  rankdir=LR;",
        '  node [shape=box fontname="monospace"];',
    ]
    for n in range(n_lo, n_hi + 1):
        lines.append(f"  {{ rank=same; /* level {n} */")
        for i, entry in enumerate(levels[n]):
            label = "(" + ",".join(map(str, entry.vector)) + ")"
            if solve is not None:
                label += f"\\nx={solve(entry.vector).x}"
            lines.append(f'    v{n}_{i} [label="{label}"];')
        lines.append("  }")
    for n in range(n_lo, n_hi + 1):
        for i, entry in enumerate(levels[n]):
            if entry.parent is None:
                continue
            kind, pi = entry.parent
            if kind == "step1" and n - 1 >= n_lo:
                lines.append(f"  v{n - 1}_{pi} -> v{n}_{i};")
            elif kind == "step2":
                lines.append(f"  v{n}_{pi} -> v{n}_{i} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
