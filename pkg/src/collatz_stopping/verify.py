"""Brute-force oracles: the doubling survival sieve, the assembled residue
table, and exhaustive stopping-time verification over integer ranges.

These routes are deliberately independent of the triangle recurrence and the
tree construction so the three can be checked against each other.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .diophantine import solve_vector
from .ladder import sigma_n
from .ptree import vset_levels
from .triangle import build_triangle, w

SIEVE_MAX_DEPTH = 26


class SieveBoundError(ValueError):
    """Refusal to run the sieve past its configured depth."""

    def __init__(self, k: int, bound: int, predicted_survivors: int):
        self.predicted_survivors = predicted_survivors
        super().__init__(
            f"sieve depth {k} exceeds the bound {bound}; "
            f"it would track {predicted_survivors} surviving residues"
        )


@dataclass(frozen=True)
class SurvivalRecord:
    """One residue r (mod 2^k) with its k-step image q (mod 3^n) and whether
    the class is still unstopped (2^k < 3^n)."""

    r: int
    k: int
    q: int
    n: int
    surviving: bool


def sieve(k: int, *, max_depth: int = SIEVE_MAX_DEPTH) -> list[SurvivalRecord]:
    """Depth-k snapshot of the survival sieve, ascending by residue.

    Seeded at 3 (mod 4), the only non-trivial depth-2 class.  Each deeper
    level doubles every survivor r into r and r + 2^k; the two children take
    an even and an odd step from the parent's exact image, so each level
    advances one T-step without recomputing trajectories.
    """
    if k < 2:
        raise ValueError(f"bit depth must be >= 2, got {k}")
    if k > max_depth:
        raise SieveBoundError(k, max_depth, w(build_triangle(k), k))
    pow3 = [1]
    for _ in range(k + 1):
        pow3.append(pow3[-1] * 3)
    records = [SurvivalRecord(r=3, k=2, q=8, n=2, surviving=4 < pow3[2])]
    for depth in range(3, k + 1):
        half = 1 << (depth - 1)
        lim = 1 << depth
        step = []
        for rec in records:
            if not rec.surviving:
                continue
            # r keeps the parent's image; r + 2^(depth-1) shifts it by 3^n.
            for r2, q_pre in ((rec.r, rec.q), (rec.r + half, rec.q + pow3[rec.n])):
                if q_pre & 1:
                    q2, n2 = (3 * q_pre + 1) // 2, rec.n + 1
                else:
                    q2, n2 = q_pre // 2, rec.n
                step.append(SurvivalRecord(r2, depth, q2, n2, lim < pow3[n2]))
        records = sorted(step, key=lambda rec: rec.r)
    return records


@dataclass(frozen=True)
class ResidueBlock:
    """The residue classes sharing one stopping time; n is None for the two
    trivial classes (even numbers, and 1 mod 4)."""

    sigma: int
    n: int | None
    residues: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return 1 << self.sigma


def residue_table(n_max: int) -> list[ResidueBlock]:
    """Stopping-time classes: the trivial sigma = 1, 2 blocks followed by the
    ascending solved class list of each level n = 1..n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    blocks = [
        ResidueBlock(sigma=1, n=None, residues=(0,)),
        ResidueBlock(sigma=2, n=None, residues=(1,)),
    ]
    levels = vset_levels(n_max)
    for n in range(1, n_max + 1):
        solutions = [solve_vector(e.vector) for e in levels[n]]
        assert all(s.member for s in solutions)  # tree levels hold exactly the members
        blocks.append(
            ResidueBlock(
                sigma=sigma_n(n), n=n, residues=tuple(sorted(s.x for s in solutions))
            )
        )
    return blocks


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive range check.

    counts maps each observed stopping time to how many x in the range have
    it; beyond_table counts x that do not stop within the table's horizon.
    Every disagreement between prediction and simulation lands in mismatches
    as (x, predicted stopping time or None, simulated stopping time or None).
    """

    x_lo: int
    x_hi: int
    n_max: int
    counts: dict[int, int]
    beyond_table: int
    mismatches: tuple[tuple[int, int | None, int | None], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


Classes = list[tuple[int, int, frozenset]]

_WORKER_CLASSES: Classes = []
_WORKER_BUDGET = 0


def _prediction_classes(n_max: int) -> Classes:
    levels = vset_levels(n_max)
    classes = []
    for n in range(1, n_max + 1):
        sig = sigma_n(n)
        members = frozenset(solve_vector(e.vector).x for e in levels[n])
        classes.append((sig, (1 << sig) - 1, members))
    return classes


def _scan_block(lo: int, hi: int, classes: Classes, budget: int) -> tuple:
    counts: dict[int, int] = {}
    beyond = 0
    mismatches = []
    max_sigma = classes[-1][0]
    for x in range(lo, hi):
        t = x
        simulated = None
        for s in range(1, budget + 1):
            t = t // 2 if t % 2 == 0 else (3 * t + 1) // 2
            if t < x:
                simulated = s
                break
        if x % 2 == 0:
            predicted = 1
        elif x % 4 == 1:
            predicted = 2
        else:
            # every non-trivial class consists of residues = 3 (mod 4)
            hits = {sig for sig, mask, members in classes if (x & mask) in members}
            predicted = min(hits) if hits else None
            if simulated is not None and simulated <= max_sigma:
                if hits != {simulated}:
                    mismatches.append((x, predicted, simulated))
                counts[simulated] = counts.get(simulated, 0) + 1
            else:
                if hits:
                    mismatches.append((x, predicted, simulated))
                beyond += 1
            continue
        if simulated != predicted:
            mismatches.append((x, predicted, simulated))
        counts[predicted] = counts.get(predicted, 0) + 1
    return counts, beyond, mismatches


def _init_worker(classes: Classes, budget: int) -> None:
    global _WORKER_CLASSES, _WORKER_BUDGET
    _WORKER_CLASSES = classes
    _WORKER_BUDGET = budget


def _worker(block: tuple[int, int]) -> tuple:
    return _scan_block(block[0], block[1], _WORKER_CLASSES, _WORKER_BUDGET)


def verify_range(
    x_lo: int,
    x_hi: int,
    n_max: int,
    *,
    jobs: int = 1,
    block_size: int = 1 << 16,
) -> VerificationReport:
    """Check every x in [x_lo, x_hi): its simulated stopping time must place
    it in exactly the predicted residue class.

    Simulation runs with budget sigma_n(n_max) + 1; x that do not stop within
    the table horizon are counted as beyond_table, not as mismatches (they
    must then lie in no class at all).  Blocks are merged in ascending order,
    so the report is identical for every jobs setting.
    """
    if x_lo < 2:
        raise ValueError(f"x_lo must be >= 2, got {x_lo}")
    if x_hi < x_lo:
        raise ValueError(f"need x_lo <= x_hi, got {x_lo}..{x_hi}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    classes = _prediction_classes(n_max)
    budget = sigma_n(n_max) + 1
    blocks = [
        (lo, min(lo + block_size, x_hi)) for lo in range(x_lo, x_hi, block_size)
    ]
    if jobs == 1 or len(blocks) <= 1:
        results = [_scan_block(lo, hi, classes, budget) for lo, hi in blocks]
    else:
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker, initargs=(classes, budget)
        ) as pool:
            results = list(pool.map(_worker, blocks))
    counts: dict[int, int] = {}
    beyond = 0
    mismatches: list[tuple[int, int | None, int | None]] = []
    for block_counts, block_beyond, block_mism in results:
        for sig, c in block_counts.items():
            counts[sig] = counts.get(sig, 0) + c
        beyond += block_beyond
        mismatches.extend(block_mism)
    return VerificationReport(
        x_lo=x_lo,
        x_hi=x_hi,
        n_max=n_max,
        counts=dict(sorted(counts.items())),
        beyond_table=beyond,
        mismatches=tuple(mismatches),
    )
