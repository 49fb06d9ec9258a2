"""Verification suites behind the command-line tasks.

Each ``run_*`` function executes one experiment family and returns a
JSON-ready dict with a ``verdict`` key: ``pass`` when every checked law
held, ``falsification-event`` when an instance violated one (the
instance is serialized next to the failure), ``partial-budget`` when a
search gave up before exhausting its space.  Randomized suites take an
explicit seed and replay exactly.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from . import combi, corpus
from .combi import (
    Graph,
    Poset,
    complement,
    edge_ideal,
    find_peo,
    graphic_matroid,
    has_long_induced_cycle,
    hibi_expected_ass,
    hibi_ideal,
    hibi_power_polarization_check,
    hibi_symbolic_intersection_check,
    hibi_v_expected,
    is_polymatroidal,
    colon_polymatroidal_check,
    dual_exchange_holds,
    neighborhood_colon_check,
    poset_classes_upto,
    transversal,
    veronese_type,
)
from .core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    colon_ideal,
    multiply,
    power,
    stats,
)
from .decomp import associated_primes, ass_oracle, has_depth_zero
from .lq import find_lq_order, linear_powers_certificate, simon_search
from .polar import verify_polarization_theorem
from .vnum import VReport, check_bounds, v_function, v_number, v_oracle

THEOREM_FLAGS = ("lower_bound_ok", "tail_b_ge_minus1", "module_alpha_ok", "min_alpha_ok")


# ---------------------------------------------------------------------------
# serialization helpers


def ideal_payload(ideal: MonomialIdeal) -> dict:
    return {
        "vars": list(ideal.context.names),
        "gens": [str(g) for g in ideal.gens],
    }


def prime_payload(prime: MonomialPrime) -> list[str]:
    return list(prime.labels)


def graph_payload(graph: Graph) -> dict:
    return {
        "n": graph.n,
        "edges": [[i + 1, j + 1] for i, j in sorted(graph.edges)],
    }


def poset_payload(poset: Poset) -> dict:
    relations = [
        [i + 1, j + 1]
        for i in range(poset.n)
        for j in range(poset.n)
        if i != j and poset.leq[i, j]
    ]
    return {"n": poset.n, "relations": relations}


def vreport_payload(report: VReport) -> dict:
    rows = []
    for row in report.rows:
        rows.append(
            {
                "k": row.k,
                "alpha": row.alpha,
                "v": row.v,
                "witness": {
                    "prime": prime_payload(row.witness.prime),
                    "monomial": str(row.witness.monomial),
                    "degree": row.witness.degree,
                },
                "embedded_free": row.embedded_free,
                "per_prime": [
                    {
                        "prime": prime_payload(entry.prime),
                        "v": entry.v,
                        "alpha_module": entry.alpha_module,
                        "maximal_in_ass": entry.maximal_in_ass,
                        "witness": str(entry.witness),
                    }
                    for entry in row.per_prime
                ],
            }
        )
    tail = None
    if report.tail_law is not None:
        tail = {
            "alpha": report.tail_law.alpha,
            "b": report.tail_law.b,
            "start": report.tail_law.start,
        }
    return {
        "k_max": report.k_max,
        "v": report.v,
        "rows": rows,
        "tail_law": tail,
        "flags": dict(report.flags),
    }


def _flags_hold(report: VReport) -> bool:
    return all(report.flags.get(name) is not False for name in THEOREM_FLAGS)


# ---------------------------------------------------------------------------
# single-ideal tasks


def run_v(ideal: MonomialIdeal) -> dict:
    value, witness = v_number(ideal)
    report = v_function(ideal, 1)
    return {
        "ideal": ideal_payload(ideal),
        "v": value,
        "witness": {
            "prime": prime_payload(witness.prime),
            "monomial": str(witness.monomial),
            "degree": witness.degree,
        },
        "per_prime": vreport_payload(report)["rows"][0]["per_prime"],
        "verdict": "pass" if _flags_hold(report) else "falsification-event",
    }


def run_vfunction(ideal: MonomialIdeal, k_max: int) -> dict:
    report = v_function(ideal, k_max)
    return {
        "ideal": ideal_payload(ideal),
        "report": vreport_payload(report),
        "verdict": "pass" if _flags_hold(report) else "falsification-event",
    }


ORACLE_BOX_CAP = 200_000


def _box_size(ideal: MonomialIdeal) -> int:
    degs = ideal.matrix.max(axis=0)
    size = 1
    for d in degs:
        size *= int(d) + 1
    return size


def run_ass(ideal: MonomialIdeal) -> dict:
    from .decomp import ass_from_decomposition, irreducible_decomposition

    direct = associated_primes(ideal)
    via_decomp = ass_from_decomposition(ideal)
    routes_agree = frozenset(direct) == frozenset(via_decomp)
    oracle_used = _box_size(ideal) <= ORACLE_BOX_CAP
    if oracle_used:
        routes_agree = routes_agree and frozenset(direct) == frozenset(
            ass_oracle(ideal)
        )
    components = irreducible_decomposition(ideal)
    return {
        "ideal": ideal_payload(ideal),
        "ass": [prime_payload(p) for p in direct],
        "minimal": [prime_payload(p) for p in direct.minimal_primes],
        "embedded": [prime_payload(p) for p in direct.embedded_primes],
        "irreducible_components": [
            [f"{ideal.context.names[i]}^{e}" if e > 1 else ideal.context.names[i]
             for i, e in comp.powers]
            for comp in components
        ],
        "oracle_used": oracle_used,
        "routes_agree": routes_agree,
        "verdict": "pass" if routes_agree else "falsification-event",
    }


# ---------------------------------------------------------------------------
# polarize-check: polarization theorem + oracle equivalence + bounds + tails


def _bound_monomials(ideal: MonomialIdeal, rng: np.random.Generator) -> list[Monomial]:
    ctx = ideal.context
    picks = list(ctx.variables())
    for _ in range(3):
        exps = rng.integers(0, 2, size=ctx.n)
        if exps.sum() == 0:
            exps[int(rng.integers(0, ctx.n))] = 1
        picks.append(ctx.monomial([int(e) for e in exps]))
    return picks


def run_polarize_check(seed: int, count: int = 100, k_max: int = 4) -> dict:
    ideals = corpus.random_corpus(seed, count)
    rng = np.random.default_rng(seed + 1)
    failures = []
    equigenerated_count = 0
    for idx, ideal in enumerate(ideals):
        instance = {"instance": idx, "ideal": ideal_payload(ideal)}

        polarization = verify_polarization_theorem(ideal)
        if not polarization["ok"]:
            failures.append({**instance, "check": "polarization", **{
                part: polarization[part] for part in "abcd"}})

        value, _ = v_number(ideal)
        if value != v_oracle(ideal):
            failures.append({**instance, "check": "v-oracle",
                             "v": value, "oracle": v_oracle(ideal)})
        if frozenset(associated_primes(ideal)) != frozenset(ass_oracle(ideal)):
            failures.append({**instance, "check": "ass-oracle"})

        bounds = check_bounds(ideal, _bound_monomials(ideal, rng))
        if not bounds["ok"]:
            failures.append({**instance, "check": "colon-bound", "samples": [
                {"monomial": str(s.monomial), "lhs": s.lhs, "rhs": s.rhs}
                for s in bounds["samples"] if s.ok is False]})

        horizon = k_max if stats(ideal).equigenerated else 1
        if horizon > 1:
            equigenerated_count += 1
        report = v_function(ideal, horizon)
        if not _flags_hold(report):
            failures.append({**instance, "check": "flags",
                             "flags": dict(report.flags)})
    by_check: dict[str, int] = {}
    for failure in failures:
        by_check[failure["check"]] = by_check.get(failure["check"], 0) + 1
    return {
        "seed": seed,
        "count": count,
        "k_max": k_max,
        "equigenerated": equigenerated_count,
        "failures": failures,
        "failures_by_check": by_check,
        "verdict": "pass" if not failures else "falsification-event",
    }


# ---------------------------------------------------------------------------
# simon search task


def run_simon(n: int, d: int, mode: str, budget: Optional[int]) -> dict:
    result = simon_search(n, d, mode=mode, budget=budget)
    if result["counterexamples"]:
        verdict = "falsification-event"
    elif not result["exhaustive"]:
        verdict = "partial-budget"
    else:
        verdict = "pass"
    return {**result, "verdict": verdict}


# ---------------------------------------------------------------------------
# edge suite


def _all_labeled_graphs(n: int) -> Iterable[Graph]:
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(
            n=n,
            edges=frozenset(pairs[t] for t in range(len(pairs)) if bits >> t & 1),
        )


def graph_classes_upto(n_max: int) -> list[Graph]:
    """All graph isomorphism classes on 1..n_max vertices, via the atlas."""
    import networkx as nx

    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= n_max:
            index = {v: t for t, v in enumerate(sorted(g.nodes))}
            out.append(Graph.from_edges(
                n, [(index[a], index[b]) for a, b in g.edges]))
    return out


def run_edge_suite(n_max: int = 6, k_max: int = 3) -> dict:
    if n_max > 6:
        raise ValueError("edge suite enumerations are desk-scale: n_max <= 6")
    failures = []

    # Dirac cross-check on every labeled graph: the PEO-based recognizer
    # and the induced-cycle scan must agree; with G ranging over all
    # graphs this is also the linear-resolution gate for complement(G).
    graphs_checked = 0
    chordal_count = 0
    for n in range(1, n_max + 1):
        for graph in _all_labeled_graphs(n):
            via_peo = find_peo(graph) is not None
            via_scan = not has_long_induced_cycle(graph)
            graphs_checked += 1
            chordal_count += via_peo
            if via_peo != via_scan:
                failures.append({
                    "check": "chordality-routes",
                    "graph": graph_payload(graph),
                    "peo_route": via_peo,
                    "cycle_route": via_scan,
                })

    # v-law on one representative per cochordal isomorphism class; the
    # checked laws are label-invariant, so classes cover all graphs.
    cochordal_count = 0
    omega = 2
    for graph in graph_classes_upto(n_max):
        if not graph.edges or find_peo(complement(graph)) is None:
            continue
        cochordal_count += 1
        instance = {"graph": graph_payload(graph)}
        ideal = edge_ideal(graph)
        report = v_function(ideal, k_max)
        expected = [2 * k - 1 for k in range(1, k_max + 1)]
        if report.v != expected:
            failures.append({**instance, "check": "v-law",
                             "v": report.v, "expected": expected})
        if not neighborhood_colon_check(graph):
            failures.append({**instance, "check": "neighborhood-colon"})
        if not _flags_hold(report):
            failures.append({**instance, "check": "flags",
                             "flags": dict(report.flags)})
        # colon persistence and the one-step growth bound on v_p
        tables = [
            {entry.prime: entry.v for entry in row.per_prime}
            for row in report.rows
        ]
        for k in range(1, k_max):
            if colon_ideal(power(ideal, k + 1), ideal) != power(ideal, k):
                failures.append({**instance, "check": "colon-persistence", "k": k})
                continue
            for prime, value in tables[k - 1].items():
                if prime in tables[k] and tables[k][prime] > value + omega:
                    failures.append({
                        **instance, "check": "growth-bound", "k": k,
                        "prime": prime_payload(prime),
                        "v_k": value, "v_k1": tables[k][prime],
                    })

    return {
        "n_max": n_max,
        "k_max": k_max,
        "graphs_checked": graphs_checked,
        "chordal": chordal_count,
        "cochordal_classes": cochordal_count,
        "failures": failures,
        "verdict": "pass" if not failures else "falsification-event",
    }


# ---------------------------------------------------------------------------
# polymatroid suite


def _sample_veronese_type(rng: np.random.Generator) -> MonomialIdeal:
    while True:
        n = int(rng.integers(2, 5))
        d = int(rng.integers(2, 5))
        caps = [int(c) for c in rng.integers(0, d + 1, size=n)]
        if sum(caps) < d:
            continue
        return veronese_type(n, d, caps)


def _sample_transversal(rng: np.random.Generator) -> MonomialIdeal:
    n = int(rng.integers(2, 5))
    r = int(rng.integers(2, 4))
    supports = []
    for _ in range(r):
        mask = rng.integers(0, 2, size=n)
        if mask.sum() == 0:
            mask[int(rng.integers(0, n))] = 1
        supports.append([i for i in range(n) if mask[i]])
    return transversal(supports, n=n)


def _sample_graphic(rng: np.random.Generator) -> MonomialIdeal:
    while True:
        nv = int(rng.integers(3, 5))
        pairs = list(combinations(range(nv), 2))
        want = int(rng.integers(2, min(6, len(pairs)) + 1))
        picks = rng.choice(len(pairs), size=want, replace=False)
        graph = Graph.from_edges(nv, [pairs[i] for i in sorted(picks)])
        if graph.n - graph.connected_component_count() >= 2:
            return graphic_matroid(graph)


def run_polymatroid_suite(seed: int, count: int = 50, k_max: int = 3) -> dict:
    rng = np.random.default_rng(seed)
    samplers = [_sample_veronese_type, _sample_transversal, _sample_graphic]
    samples = [samplers[i % 3](rng) for i in range(count)]
    failures = []
    for idx, ideal in enumerate(samples):
        instance = {"instance": idx, "ideal": ideal_payload(ideal)}
        if not (is_polymatroidal(ideal) and dual_exchange_holds(ideal)):
            failures.append({**instance, "check": "exchange"})
            continue
        alpha = stats(ideal).alpha
        report = v_function(ideal, k_max)
        expected = [alpha * k - 1 for k in range(1, k_max + 1)]
        if report.v != expected:
            failures.append({**instance, "check": "v-law",
                             "v": report.v, "expected": expected})
        if not colon_polymatroidal_check(ideal):
            failures.append({**instance, "check": "variable-colon"})
        if not _flags_hold(report):
            failures.append({**instance, "check": "flags",
                             "flags": dict(report.flags)})
    products_checked = 0
    by_context: dict[tuple, MonomialIdeal] = {}
    for idx, ideal in enumerate(samples):
        key = ideal.context.names
        if key in by_context:
            product = multiply(by_context[key], ideal)
            products_checked += 1
            if not is_polymatroidal(product):
                failures.append({
                    "check": "product-exchange",
                    "left": ideal_payload(by_context[key]),
                    "right": ideal_payload(ideal),
                })
        by_context[key] = ideal
    return {
        "seed": seed,
        "count": count,
        "k_max": k_max,
        "products_checked": products_checked,
        "failures": failures,
        "verdict": "pass" if not failures else "falsification-event",
    }


# ---------------------------------------------------------------------------
# hibi suite


def run_hibi_suite(n_max: int = 4, k_max: int = 2) -> dict:
    if n_max > 4:
        raise ValueError("hibi suite poset enumeration is desk-scale: n_max <= 4")
    failures = []
    classes = poset_classes_upto(n_max)
    for idx, poset in enumerate(classes):
        instance = {"instance": idx, "poset": poset_payload(poset)}
        ideal = hibi_ideal(poset)
        expected_ass = hibi_expected_ass(poset)
        report = v_function(ideal, k_max)
        for k in range(1, k_max + 1):
            row = report.rows[k - 1]
            table = {entry.prime: entry.v for entry in row.per_prime}
            if table != hibi_v_expected(poset, k):
                failures.append({**instance, "check": "v-table", "k": k,
                                 "table": {" ".join(prime_payload(p)): v
                                           for p, v in sorted(
                                               table.items(),
                                               key=lambda t: t[0].sort_key)}})
            if frozenset(table) != expected_ass:
                failures.append({**instance, "check": "ass", "k": k})
            if not hibi_power_polarization_check(poset, k):
                failures.append({**instance, "check": "polarization", "k": k})
            if not hibi_symbolic_intersection_check(poset, k):
                failures.append({**instance, "check": "intersection", "k": k})
        if not _flags_hold(report):
            failures.append({**instance, "check": "flags",
                             "flags": dict(report.flags)})
    return {
        "n_max": n_max,
        "k_max": k_max,
        "classes": len(classes),
        "failures": failures,
        "verdict": "pass" if not failures else "falsification-event",
    }


# ---------------------------------------------------------------------------
# depth-zero suite


def _depth_zero_law_failures(ideal: MonomialIdeal, k_max: int) -> list[dict]:
    out = []
    alpha = stats(ideal).alpha
    maximal = ideal.context.maximal_prime()
    report = v_function(ideal, k_max)
    for k in range(1, k_max + 1):
        row = report.rows[k - 1]
        expected = alpha * k - 1
        if not has_depth_zero(power(ideal, k)):
            out.append({"check": "depth-zero", "k": k})
            continue
        if row.v != expected:
            out.append({"check": "v-law", "k": k, "v": row.v,
                        "expected": expected})
        socle = [e for e in row.per_prime if e.prime == maximal]
        if not socle or socle[0].alpha_module != expected:
            out.append({"check": "socle-degree", "k": k,
                        "alpha_module": socle[0].alpha_module if socle else None,
                        "expected": expected})
    return out


def run_depthzero_suite(
    seed: int, count: int = 10, k_max: int = 3, budget: int = 200_000
) -> dict:
    failures = []
    grid = []
    for n in range(1, 4):
        ctx = VarContext([f"x{i+1}" for i in range(n)])
        for d in range(1, 4):
            ideal = power(ctx.maximal_prime().as_ideal(), d)
            grid.append((f"m^{d} in {n} vars", ideal))
            for item in _depth_zero_law_failures(ideal, k_max):
                failures.append({"instance": grid[-1][0],
                                 "ideal": ideal_payload(ideal), **item})

    rng = np.random.default_rng(seed)
    accepted = []
    attempts = 0
    while len(accepted) < count and attempts < 40 * count:
        attempts += 1
        ideal = corpus.random_primary_equigenerated_ideal(rng)
        certificates = linear_powers_certificate(ideal, k_max, budget=budget)
        if any(c.order is None for c in certificates):
            continue
        accepted.append(ideal)
        for item in _depth_zero_law_failures(ideal, k_max):
            failures.append({"instance": f"sample-{len(accepted)-1}",
                             "ideal": ideal_payload(ideal), **item})
    if failures:
        verdict = "falsification-event"
    elif len(accepted) < count:
        verdict = "partial-budget"
    else:
        verdict = "pass"
    return {
        "seed": seed,
        "count_requested": count,
        "count_sampled": len(accepted),
        "grid": [name for name, _ in grid],
        "k_max": k_max,
        "failures": failures,
        "verdict": verdict,
    }
