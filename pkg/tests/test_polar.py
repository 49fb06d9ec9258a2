"""Tests for polarization and the v-number correspondence checks."""

import numpy as np
import pytest

from vnumber import (
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    polarize,
    specialize,
    stats,
    v_number,
    v_oracle,
    verify_polarization_theorem,
)


def _ideal(ctx, gens):
    return MonomialIdeal(ctx, [ctx.monomial(g) for g in gens])


def test_polarize_hand_example(ctx2):
    ideal = _ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}])
    pol = polarize(ideal)
    assert pol.target.names == ("x_1", "x_2", "y_1")
    assert pol.var_map == (0, 0, 1)
    assert pol.blocks == ((0, 1), (2,))
    assert {str(g) for g in pol.ideal.gens} == {"x_1 x_2", "x_1 y_1"}
    assert stats(pol.ideal).squarefree
    assert pol.ideal.num_gens == ideal.num_gens
    assert specialize(pol, pol.ideal) == ideal


def test_monomial_round_trip(ctx2):
    ideal = _ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}])
    pol = polarize(ideal)
    x, y = ctx2.variables()
    for f in (x, y, x * y, x * x, x * x * y):
        assert specialize(pol, pol.polarize_monomial(f)) == f
    with pytest.raises(ValueError):
        pol.polarize_monomial(x * x * x)  # only two copies of x exist
    with pytest.raises(ValueError):
        polarize(MonomialIdeal.zero(ctx2))


def test_unit_ideal_polarizes(ctx2):
    pol = polarize(MonomialIdeal.unit(ctx2))
    assert pol.ideal.is_unit
    assert pol.target.n == ctx2.n


def test_squarefree_polarization_is_relabeling(rng):
    for _ in range(20):
        n = int(rng.integers(2, 5))
        ctx = VarContext([f"x{i+1}" for i in range(n)])
        rows = (rng.random((int(rng.integers(1, 5)), n)) < 0.5).astype(np.int64)
        rows = rows[rows.sum(axis=1) > 0]
        if not len(rows):
            continue
        ideal = MonomialIdeal(ctx, [ctx.monomial(r) for r in rows])
        res = verify_polarization_theorem(ideal)
        assert res["ok"], f"squarefree correspondence failed on {ideal!r}"
        assert res["v_source"] == res["v_target"]


def test_correspondence_counterexample():
    # I = (x2^2, x1^2 x2): v(I) = 2 but its polarization reaches v = 1
    # via the witness x2_2, whose colon is the prime (x2_1).  The prime
    # fiber map (part a) still holds; the per-prime inequality (b), the
    # fiber minimum (c), and the global equality (d) all fail.
    ctx = VarContext(["x1", "x2"])
    ideal = _ideal(ctx, [{"x2": 2}, {"x1": 2, "x2": 1}])
    assert v_number(ideal)[0] == 2
    assert v_oracle(ideal) == 2

    res = verify_polarization_theorem(ideal)
    assert res["a"] is True
    assert res["b"] is False
    assert res["c"] is False
    assert res["d"] is False
    assert not res["ok"]
    assert (res["v_source"], res["v_target"]) == (2, 1)

    pol = polarize(ideal)
    assert v_oracle(pol.ideal) == 1
    # the cheap witness: (I^p : x2_2) = (x2_1), a minimal prime
    f = pol.target.monomial({"x2_2": 1})
    from vnumber import colon_monomial

    quotient = colon_monomial(pol.ideal, f)
    assert quotient.as_prime() == MonomialPrime(pol.target, ["x2_1"])


def test_invariants_on_corpus(small_corpus):
    for ideal in small_corpus:
        pol = polarize(ideal)
        assert stats(pol.ideal).squarefree
        assert pol.ideal.num_gens == ideal.num_gens
        assert specialize(pol, pol.ideal) == ideal
        res = verify_polarization_theorem(ideal)
        # the prime fiber map and the downward inequality always hold
        assert res["a"]
        assert res["v_target"] <= res["v_source"]


def test_specialize_prime_and_type_guards(ctx2):
    ideal = _ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}])
    pol = polarize(ideal)
    q = MonomialPrime(pol.target, ["x_1", "y_1"])
    assert specialize(pol, q) == MonomialPrime(ctx2, ["x", "y"])
    with pytest.raises(TypeError):
        specialize(pol, 7)
    with pytest.raises(ValueError):
        pol.specialize_monomial(ctx2.variables()[0])
