"""Tests for v-numbers, v-functions, and the bound checks."""

import pytest

from vnumber import (
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    check_bounds,
    colon_module_gens,
    colon_monomial,
    power,
    projective_plane_ideal,
    stats,
    v_at_prime,
    v_function,
    v_number,
    v_oracle,
)


def _ideal(ctx, gens):
    return MonomialIdeal(ctx, [ctx.monomial(g) for g in gens])


def test_hand_values(ctx2):
    # (x^2, x y): v over (x) is 1 via y, v over (x, y) is 1 via x
    ideal = _ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}])
    px = MonomialPrime(ctx2, ["x"])
    pm = MonomialPrime(ctx2, ["x", "y"])
    vx, wx = v_at_prime(ideal, px)
    vm, wm = v_at_prime(ideal, pm)
    assert (vx, str(wx.monomial)) == (1, "y")
    assert (vm, str(wm.monomial)) == (1, "x")
    v, w = v_number(ideal)
    assert v == 1
    # tie at degree one resolves to the lex-smaller exponent vector
    assert str(w.monomial) == "y" and w.prime == px


def test_maximal_powers(ctx2):
    maximal = _ideal(ctx2, [{"x": 1}, {"y": 1}])
    for d in (1, 2, 3):
        md = power(maximal, d)
        v, w = v_number(md)
        assert v == d - 1
        assert colon_monomial(md, w.monomial) == maximal

    rep = v_function(_ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}, {"y": 2}]), 4)
    assert rep.v == [1, 3, 5, 7]
    assert rep.tail_law is not None
    assert (rep.tail_law.alpha, rep.tail_law.b, rep.tail_law.start) == (2, -1, 1)


def test_witnesses_cut_out_their_primes(small_corpus):
    for ideal in small_corpus:
        v, w = v_number(ideal)
        assert w.degree == v
        assert not ideal.contains(w.monomial)
        assert colon_monomial(ideal, w.monomial) == w.prime.as_ideal()


def test_v_agrees_with_oracle(small_corpus):
    for ideal in small_corpus:
        assert v_number(ideal)[0] == v_oracle(ideal)


def test_colon_module_gens(ctx2):
    ideal = _ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}])
    px = MonomialPrime(ctx2, ["x"])
    gens = colon_module_gens(ideal, px)
    assert {str(g) for g in gens} == {"x", "y"}
    for g in gens:
        assert not ideal.contains(g)
        assert all(not h.divides(g) for h in gens if h is not g)
    with pytest.raises(ValueError):
        colon_module_gens(ideal, MonomialPrime(ctx2, ["y"]))


def test_terai_first_power(terai_ideal):
    rep = v_function(terai_ideal, 1)
    assert rep.v == [3]
    row = rep.rows[0]
    assert colon_monomial(terai_ideal, row.witness.monomial) == (
        row.witness.prime.as_ideal()
    )


def test_flags_on_equigenerated(ctx2):
    rep = v_function(_ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}, {"y": 2}]), 4)
    assert rep.flags["lower_bound_ok"]
    assert rep.flags["band_offsets"] == (-1, -1, -1, -1)
    assert rep.flags["band_ok"]
    assert rep.flags["tail_b_ge_minus1"]
    assert rep.flags["linear_powers_all_k"]
    assert rep.flags["module_alpha_ok"]
    assert rep.flags["min_alpha_ok"]
    assert set(k for _, k in rep.per_prime) == {1, 2, 3, 4}


def test_flags_on_non_equigenerated(ctx2):
    rep = v_function(_ideal(ctx2, [{"x": 1}, {"y": 2}]), 2)
    assert rep.tail_law is None
    assert rep.flags["tail_b_ge_minus1"] is None
    assert rep.flags["linear_powers_all_k"] is None
    assert rep.flags["lower_bound_ok"]
    with pytest.raises(ValueError):
        v_function(_ideal(ctx2, [{"x": 2}]), 0)


def test_check_bounds(ctx2):
    ideal = _ideal(ctx2, [{"x": 2}, {"x": 1, "y": 1}])
    x, y = ctx2.variables()
    report = check_bounds(ideal, [x, y, x * x * y, ctx2.unit()])
    assert report["ok"]
    assert report["v"] == 1 and report["alpha"] == 2
    by_monomial = {str(s.monomial): s for s in report["samples"]}
    assert by_monomial["x^2 y"].skipped
    assert not by_monomial["x"].skipped
    # the unit sample reduces to v(I) <= v(I) + 0
    unit_row = by_monomial["1"]
    assert (unit_row.lhs, unit_row.rhs) == (report["v"], report["v"])
    assert all(pr["ok"] for pr in report["prime_lower_bounds"])


def test_alpha_lower_bound_over_corpus(small_corpus):
    for ideal in small_corpus:
        alpha = stats(ideal).alpha
        from vnumber import associated_primes

        for p in associated_primes(ideal):
            vp, _ = v_at_prime(ideal, p)
            assert vp >= alpha - 1
