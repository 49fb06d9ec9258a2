"""Shared fixtures and slow pure-Python reference implementations.

The references here are deliberately naive (quadratic divisibility
filters, box enumerations); the tests pit the package's vectorized
paths against them on seeded random inputs.
"""

from itertools import product

import numpy as np
import pytest

from vnumber import MonomialIdeal, VarContext, projective_plane_ideal
from vnumber.corpus import random_corpus, random_ideal


def ref_minimal_rows(rows) -> set[tuple[int, ...]]:
    """Divisibility-minimal rows by the O(m^2) definition."""
    rows = [tuple(int(e) for e in r) for r in rows]
    out = set()
    for r in rows:
        divisors = [
            s for s in rows if s != r and all(a <= b for a, b in zip(s, r))
        ]
        if not divisors:
            out.add(r)
    return out


def ref_member(ideal: MonomialIdeal, exponents) -> bool:
    """Membership by scanning the generator list."""
    return any(
        all(int(g) <= int(e) for g, e in zip(row, exponents))
        for row in ideal.matrix
    )


def box_points(bounds):
    """All lattice points of the box prod [0, b_i]."""
    return product(*(range(int(b) + 1) for b in bounds))


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20250815)


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(20250815, 30)


@pytest.fixture(scope="session")
def terai_ideal():
    return projective_plane_ideal()


@pytest.fixture()
def ctx2():
    return VarContext(["x", "y"])


@pytest.fixture()
def ctx3():
    return VarContext(["x1", "x2", "x3"])
