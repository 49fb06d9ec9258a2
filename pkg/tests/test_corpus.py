"""Tests for the random corpus generators."""

from vnumber import stats
from vnumber.corpus import (
    CORPUS_EXPONENT_MAX,
    CORPUS_GENS_MAX,
    CORPUS_N_MAX,
    random_corpus,
    random_equigenerated_ideal,
    random_primary_equigenerated_ideal,
)

import numpy as np


def test_corpus_is_deterministic():
    a = random_corpus(42, 25)
    b = random_corpus(42, 25)
    assert len(a) == len(b) == 25
    for left, right in zip(a, b):
        assert left == right
    assert any(x != y for x, y in zip(a, random_corpus(43, 25)))


def test_corpus_respects_caps():
    for ideal in random_corpus(7, 40):
        assert ideal.is_proper
        assert 1 <= ideal.context.n <= CORPUS_N_MAX
        assert ideal.num_gens <= CORPUS_GENS_MAX
        assert int(ideal.matrix.max()) <= CORPUS_EXPONENT_MAX


def test_equigenerated_sampler():
    rng = np.random.default_rng(3)
    for _ in range(20):
        ideal = random_equigenerated_ideal(rng)
        assert stats(ideal).equigenerated


def test_primary_sampler_has_depth_zero():
    from vnumber import has_depth_zero, power

    rng = np.random.default_rng(5)
    for _ in range(5):
        ideal = random_primary_equigenerated_ideal(rng)
        assert stats(ideal).equigenerated
        for k in (1, 2):
            assert has_depth_zero(power(ideal, k))
