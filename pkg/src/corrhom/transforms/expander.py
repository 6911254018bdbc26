"""Verified bipartite masks for parallel-edge elimination.

A mask is an ``N x N`` 0/1 matrix such that any ``t`` rows and any ``t``
columns (``t = ceil(N / n)``) meet in at least one 1 and at least one 0.
If each of ``N`` copies of two vertices takes one of ``n`` values, the
majority value on each side occupies at least ``t`` copies, so the two
majority values meet across both a 1-entry and a 0-entry.

Masks are drawn at random from the seed, repaired by a randomised local
search, and then checked exhaustively; nothing unverified is returned.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from ..errors import RetriesExhausted


@dataclass(frozen=True)
class BipartiteMask:
    n: int
    N: int
    t: int
    rows: tuple[int, ...]  # rows[i] bit j == entry (i, j)

    def bit(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    @property
    def matrix(self) -> list[list[int]]:
        return [[self.bit(i, j) for j in range(self.N)] for i in range(self.N)]


def _expected_monochrome_blocks(N: int, t: int) -> float:
    return math.comb(N, t) ** 2 * 2.0 ** (1 - t * t)


def blowup_size(n: int) -> int:
    """Number of copies per vertex used for a target with ``n`` vertices.

    Starts from ``max(ceil(n log2 n) + 1, 2n)`` and grows until a mask is
    realistic: ``t = 2`` only works for ``N <= 4`` (larger 0/1 matrices
    always contain a monochromatic 2x2 rectangle), and a uniformly random
    mask should have at most ``N^2`` bad blocks on average so that local
    repair converges.
    """
    if n < 2:
        raise ValueError("blow-up needs at least two target vertices")
    N = max(math.ceil(n * math.log2(n)) + 1, 2 * n)
    while True:
        t = math.ceil(N / n)
        if (t >= 3 or N <= 4) and _expected_monochrome_blocks(N, t) <= N * N:
            return N
        N += 1


def monochrome_blocks(rows: tuple[int, ...] | list[int], N: int, t: int) -> list[tuple[tuple[int, ...], int]]:
    """All ``(row subset, column mask)`` pairs with ``t`` rows and at least
    ``t`` columns that are constant on them (exhaustive)."""
    full = (1 << N) - 1
    bad = []
    for R in itertools.combinations(range(N), t):
        ones = full
        zeros = full
        for r in R:
            ones &= rows[r]
            zeros &= ~rows[r]
        zeros &= full
        if bin(ones).count("1") >= t:
            bad.append((R, ones))
        if bin(zeros).count("1") >= t:
            bad.append((R, zeros))
    return bad


def is_verified(mask: BipartiteMask) -> bool:
    return not monochrome_blocks(mask.rows, mask.N, mask.t)


def sample_verified_expander(n: int, seed: int = 0, max_retries: int = 1000) -> BipartiteMask:
    """Deterministic (given ``seed``) verified mask for an ``n``-vertex target."""
    N = blowup_size(n)
    t = math.ceil(N / n)
    rng = random.Random(f"expander:{n}:{seed}")
    steps = 10 * N * N
    for _ in range(max_retries):
        rows = [rng.getrandbits(N) for _ in range(N)]
        for _ in range(steps):
            bad = monochrome_blocks(rows, N, t)
            if not bad:
                return BipartiteMask(n, N, t, tuple(rows))
            R, cols = rng.choice(bad)
            col = rng.choice([j for j in range(N) if cols >> j & 1])
            rows[rng.choice(R)] ^= 1 << col
    raise RetriesExhausted(
        f"no verified {N}x{N} mask with t={t} found for n={n} in {max_retries} retries"
    )
