"""Seeded random corpora feeding the verification suites.

Everything here draws from a numpy Generator so that a (seed, count)
pair pins the corpus exactly; suite reports echo the seed and replay
bit-for-bit.  Scales are deliberately small: the algorithms downstream
are exponential in the worst case and the suites run at desk scale.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

import numpy as np

from .core import MonomialIdeal, VarContext

CORPUS_N_MAX = 4
CORPUS_EXPONENT_MAX = 3
CORPUS_GENS_MAX = 6


def _context(n: int) -> VarContext:
    return VarContext([f"x{i+1}" for i in range(n)])


def random_ideal(
    rng: np.random.Generator,
    n_max: int = CORPUS_N_MAX,
    max_exponent: int = CORPUS_EXPONENT_MAX,
    max_gens: int = CORPUS_GENS_MAX,
) -> MonomialIdeal:
    """One proper nonzero monomial ideal with bounded shape."""
    n = int(rng.integers(1, n_max + 1))
    ctx = _context(n)
    while True:
        count = int(rng.integers(1, max_gens + 1))
        rows = rng.integers(0, max_exponent + 1, size=(count, n))
        rows = rows[rows.sum(axis=1) > 0]  # a zero row would make the ideal unit
        if len(rows):
            return MonomialIdeal.from_exponents(ctx, rows.astype(np.int64))


def random_corpus(
    seed: int,
    count: int,
    n_max: int = CORPUS_N_MAX,
    max_exponent: int = CORPUS_EXPONENT_MAX,
    max_gens: int = CORPUS_GENS_MAX,
) -> list[MonomialIdeal]:
    rng = np.random.default_rng(seed)
    return [
        random_ideal(rng, n_max=n_max, max_exponent=max_exponent, max_gens=max_gens)
        for _ in range(count)
    ]


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    out = []
    for cuts in combinations(range(total + parts - 1), parts - 1):
        prev, row = -1, []
        for c in cuts:
            row.append(c - prev - 1)
            prev = c
        row.append(total + parts - 2 - prev)
        out.append(tuple(row))
    return out


def random_equigenerated_ideal(
    rng: np.random.Generator,
    n_max: int = CORPUS_N_MAX,
    degree_max: int = CORPUS_EXPONENT_MAX,
    max_gens: int = CORPUS_GENS_MAX,
) -> MonomialIdeal:
    """One proper nonzero ideal whose generators share one degree."""
    n = int(rng.integers(1, n_max + 1))
    d = int(rng.integers(1, degree_max + 1))
    pool = _compositions(d, n)
    count = int(rng.integers(1, min(max_gens, len(pool)) + 1))
    picks = rng.choice(len(pool), size=count, replace=False)
    rows = np.array([pool[i] for i in sorted(picks)], dtype=np.int64)
    return MonomialIdeal.from_exponents(_context(n), rows)


def random_primary_equigenerated_ideal(
    rng: np.random.Generator,
    n_max: int = 3,
    degree_max: int = 3,
) -> MonomialIdeal:
    """Equigenerated and containing every pure power x_i^d.

    Containing the pure powers forces the maximal ideal to be the only
    associated prime of every power, so all powers have depth zero;
    these are the raw candidates for the depth-zero suite.
    """
    n = int(rng.integers(2, n_max + 1))
    d = int(rng.integers(2, degree_max + 1))
    pool = _compositions(d, n)
    pure = [row for row in pool if max(row) == d]
    mixed = [row for row in pool if max(row) < d]
    extra = int(rng.integers(0, len(mixed) + 1))
    picks = rng.choice(len(mixed), size=extra, replace=False) if extra else []
    rows = pure + [mixed[i] for i in sorted(picks)]
    return MonomialIdeal.from_exponents(_context(n), np.array(rows, dtype=np.int64))
