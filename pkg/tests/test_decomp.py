"""Tests for irreducible decomposition and associated primes."""

import numpy as np
import pytest

from vnumber import (
    AssSet,
    IrreducibleComponent,
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    ass_from_decomposition,
    ass_oracle,
    ass_powers,
    associated_primes,
    has_depth_zero,
    intersect,
    irreducible_decomposition,
)


def _ideal(ctx, gens):
    return MonomialIdeal(ctx, [ctx.monomial(g) for g in gens])


def test_hand_decomposition(ctx2):
    # (x^2, x y) = (x) \cap (x^2, y)
    ideal = _ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}])
    comps = irreducible_decomposition(ideal)
    assert sorted(c.powers for c in comps) == [((0, 1),), ((0, 2), (1, 1))]
    assert has_depth_zero(ideal)

    ass = associated_primes(ideal)
    assert ass.support_sets() == frozenset({frozenset({0}), frozenset({0, 1})})
    assert [p.labels for p in ass.minimal_primes] == [("x",)]
    assert [p.labels for p in ass.embedded_primes] == [("x", "y")]
    assert [p.labels for p in ass.max_primes] == [("x", "y")]


def test_squarefree_path_covers():
    # edge ideal of the path 1-2-3: components = minimal vertex covers
    ctx = VarContext(["x1", "x2", "x3"])
    ideal = _ideal(ctx, [{"x1": 1, "x2": 1}, {"x2": 1, "x3": 1}])
    ass = associated_primes(ideal)
    assert ass.support_sets() == frozenset({frozenset({1}), frozenset({0, 2})})
    assert ass.embedded_primes == ()
    assert not has_depth_zero(ideal)


def test_decomposition_intersects_back(small_corpus):
    for ideal in small_corpus:
        comps = irreducible_decomposition(ideal)
        ideals = [c.as_ideal() for c in comps]
        total = ideals[0]
        for other in ideals[1:]:
            total = intersect(total, other)
        assert total == ideal
        # irredundant: removing any component changes the intersection
        for skip in range(len(ideals)):
            rest = [q for t, q in enumerate(ideals) if t != skip]
            if not rest:
                continue
            partial = rest[0]
            for other in rest[1:]:
                partial = intersect(partial, other)
            assert partial != ideal


def test_three_routes_agree(small_corpus):
    for ideal in small_corpus:
        direct = frozenset(associated_primes(ideal))
        assert direct == ass_from_decomposition(ideal)
        box = ideal.matrix.max(axis=0)
        if np.prod(box + 1) <= 20_000:
            assert direct == ass_oracle(ideal)


def test_component_validation(ctx2):
    with pytest.raises(ValueError):
        IrreducibleComponent(ctx2, ())
    with pytest.raises(ValueError):
        IrreducibleComponent(ctx2, ((0, 0),))
    with pytest.raises(ValueError):
        IrreducibleComponent(ctx2, ((1, 1), (0, 2)))
    with pytest.raises(ValueError):
        IrreducibleComponent(ctx2, ((0, 1), (0, 2)))
    comp = IrreducibleComponent(ctx2, ((0, 2), (1, 1)))
    assert comp.prime == MonomialPrime(ctx2, [0, 1])
    assert comp.as_ideal().num_gens == 2


def test_ass_powers_stabilizes(ctx2):
    maximal = _ideal(ctx2, [{"x": 1}, {"y": 1}])
    powers = ass_powers(maximal, 3)
    assert all(
        s.support_sets() == frozenset({frozenset({0, 1})}) for s in powers
    )
    assert powers.stabilized_at_end
    assert ass_powers(maximal, 1).stabilized_at_end is None
    with pytest.raises(ValueError):
        ass_powers(maximal, 0)


def test_improper_inputs_rejected(ctx2):
    for bad in (MonomialIdeal.zero(ctx2), MonomialIdeal.unit(ctx2)):
        with pytest.raises(ValueError):
            irreducible_decomposition(bad)
        with pytest.raises(ValueError):
            associated_primes(bad)
        with pytest.raises(ValueError):
            has_depth_zero(bad)


def test_oracle_box_guards(ctx2):
    ideal = _ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}])
    with pytest.raises(ValueError):
        ass_oracle(ideal, box=(2,))
    with pytest.raises(ValueError):
        ass_oracle(ideal, box=(-1, 2))
    with pytest.raises(ValueError):
        ass_oracle(ideal, box=(10**6, 10**6))
    # an undersized box may miss primes but must stay a subset
    assert ass_oracle(ideal, box=(1, 1)) <= frozenset(associated_primes(ideal))


def test_ass_set_shape(ctx3):
    ideal = _ideal(ctx3, [{"x1": 2}, {"x1": 1, "x2": 1}, {"x2": 3, "x3": 1}])
    ass = associated_primes(ideal)
    assert isinstance(ass, AssSet)
    assert len(ass) == len(ass.primes)
    for p in ass:
        assert p in ass
    assert set(ass.minimal_primes) | set(ass.embedded_primes) == set(ass.primes)
