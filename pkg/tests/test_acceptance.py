"""Acceptance gate: ten criteria, one printed verdict line each.

Run with ``pytest -s tests/test_acceptance.py`` to see every line; under
default capture the lines of failing criteria still appear in the
report.  Criteria 5, 6, 7, and 10 share one 100-ideal random corpus
run and are separated by which named check produced failures on it.
"""

import time

import pytest

from vnumber import (
    projective_plane_ideal,
    simon_search,
    v_function,
)
from vnumber.suites import (
    run_depthzero_suite,
    run_edge_suite,
    run_hibi_suite,
    run_polarize_check,
    run_polymatroid_suite,
)


def _verdict(number: int, ok: bool, detail: str) -> None:
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number} failed - {detail}"


@pytest.fixture(scope="module")
def corpus_report():
    return run_polarize_check(seed=42, count=100, k_max=4)


def test_criterion_01_terai_v_function():
    started = time.perf_counter()
    report = v_function(projective_plane_ideal(), 3)
    elapsed = time.perf_counter() - started
    ok = report.v == [3, 5, 8] and elapsed < 300.0
    _verdict(1, ok, f"v(I^k) for k<=3 = {report.v} in {elapsed:.1f}s")


def test_criterion_02_hibi_suite():
    report = run_hibi_suite(n_max=4, k_max=2)
    ok = report["verdict"] == "pass"
    _verdict(
        2,
        ok,
        f"{report['classes']} poset classes, k<=2: v-table, Ass, "
        f"polarization, intersection all agree"
        if ok
        else f"{len(report['failures'])} failures: {report['failures'][:2]}",
    )


def test_criterion_03_edge_suite():
    report = run_edge_suite(n_max=6, k_max=3)
    ok = report["verdict"] == "pass"
    _verdict(
        3,
        ok,
        f"{report['graphs_checked']} labeled graphs gated, "
        f"{report['cochordal_classes']} cochordal classes obey the v-laws"
        if ok
        else f"{len(report['failures'])} failures: {report['failures'][:2]}",
    )


def test_criterion_04_polymatroid_suite():
    report = run_polymatroid_suite(seed=7, count=50, k_max=3)
    ok = report["verdict"] == "pass" and report["count"] >= 50
    _verdict(
        4,
        ok,
        f"{report['count']} sampled polymatroidal ideals, "
        f"{report['products_checked']} products, all laws hold"
        if ok
        else f"{len(report['failures'])} failures: {report['failures'][:2]}",
    )


def test_criterion_05_polarization_theorem(corpus_report):
    failures = [
        f for f in corpus_report["failures"] if f["check"] == "polarization"
    ]
    ok = not failures
    if ok:
        detail = (
            f"all four correspondence parts hold on "
            f"{corpus_report['count']} random ideals"
        )
    else:
        first = failures[0]
        parts = "".join(p for p in "abcd" if first[p] is False)
        detail = (
            f"{len(failures)}/{corpus_report['count']} ideals violate the "
            f"correspondence; first reproducer {first['ideal']['gens']} "
            f"fails parts '{parts}'"
        )
    _verdict(5, ok, detail)


def test_criterion_06_oracle_agreement(corpus_report):
    failures = [
        f
        for f in corpus_report["failures"]
        if f["check"] in ("v-oracle", "ass-oracle")
    ]
    _verdict(
        6,
        not failures,
        f"v and Ass match their brute-force oracles on "
        f"{corpus_report['count']} ideals"
        if not failures
        else f"oracle disagreements: {failures[:2]}",
    )


def test_criterion_07_bound_invariants(corpus_report):
    bound_failures = [
        f for f in corpus_report["failures"] if f["check"] == "colon-bound"
    ]
    flag_failures = [
        f
        for f in corpus_report["failures"]
        if f["check"] == "flags"
        and any(
            f["flags"].get(name) is False
            for name in ("lower_bound_ok", "module_alpha_ok", "min_alpha_ok")
        )
    ]
    ok = not bound_failures and not flag_failures
    _verdict(
        7,
        ok,
        f"v_p >= alpha-1, colon bound, and both colon-module identities "
        f"hold on {corpus_report['count']} ideals"
        if ok
        else f"violations: {(bound_failures + flag_failures)[:2]}",
    )


def test_criterion_08_simon_sweeps():
    configs = [
        ("squarefree", 4, 2),
        ("squarefree", 4, 3),
        ("squarefree", 5, 2),
        ("monomial", 2, 1),
        ("monomial", 2, 2),
        ("monomial", 2, 3),
        ("monomial", 2, 4),
        ("monomial", 3, 2),
        ("monomial", 3, 3),
    ]
    bad = []
    lq_total = 0
    for mode, n, d in configs:
        sweep = simon_search(n, d, mode)
        lq_total += sweep["lq_ideals"]
        if sweep["counterexamples"] or not sweep["exhaustive"]:
            bad.append((mode, n, d, sweep["counterexamples"]))
    _verdict(
        8,
        not bad,
        f"{len(configs)} exhaustive sweeps, {lq_total} LQ ideals, "
        f"every one extends to its target"
        if not bad
        else f"failing configs: {bad}",
    )


def test_criterion_09_depth_zero_law():
    report = run_depthzero_suite(seed=11, count=10, k_max=3)
    ok = report["verdict"] == "pass" and report["count_sampled"] >= 10
    _verdict(
        9,
        ok,
        f"m^d grid ({len(report['grid'])} ideals) plus "
        f"{report['count_sampled']} sampled depth-zero ideals obey "
        f"v(I^k) = alpha(I)k - 1"
        if ok
        else f"verdict {report['verdict']}, failures {report['failures'][:2]}",
    )


def test_criterion_10_tail_offset(corpus_report):
    failures = [
        f
        for f in corpus_report["failures"]
        if f["check"] == "flags" and f["flags"].get("tail_b_ge_minus1") is False
    ]
    _verdict(
        10,
        not failures,
        f"tail offset b >= -1 on all {corpus_report['equigenerated']} "
        f"equigenerated corpus ideals (k <= {corpus_report['k_max']})"
        if not failures
        else f"tail violations: {failures[:2]}",
    )
