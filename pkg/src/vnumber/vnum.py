"""v-numbers of monomial ideals and their behavior under powers.

The v-number at an associated prime p is the least degree of a
monomial f with (I : f) = p.  The computation never touches candidate
monomials at large: the minimal generators of the colon module
(I : p)/I already contain a minimizer for every associated p, so each
per-prime value is a short scan over those generators.  A brute-force
degree-by-degree oracle is kept alongside as an independent route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Union

import numpy as np

from .core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon_ideal,
    colon_monomial,
    colon_rows,
    member_mask,
    multiply,
    prime_support_of_rows,
    stats,
)
from .decomp import AssSet, associated_primes


@dataclass(frozen=True)
class VWitness:
    """A monomial realizing a v-number: (I : monomial) = prime exactly."""

    prime: MonomialPrime
    monomial: Monomial
    degree: int


@dataclass(frozen=True)
class PrimeV:
    """One row of the per-prime v table, with the supporting quantities."""

    prime: MonomialPrime
    k: int
    v: int
    alpha_module: int  # least degree among minimal generators of (I^k : p)/I^k
    maximal_in_ass: bool
    witness: Monomial


@dataclass(frozen=True)
class VPowerRow:
    """All v data of a single power I^k."""

    k: int
    alpha: int  # alpha(I^k)
    v: int
    witness: VWitness
    per_prime: tuple[PrimeV, ...]
    embedded_free: bool


@dataclass(frozen=True)
class TailLaw:
    """Observed law v(I^k) = alpha*k + b on the window start <= k <= K."""

    alpha: int
    b: int
    start: int


@dataclass
class VReport:
    """v_p(I^k) table for k = 1..K plus the fitted tail and flag verdicts."""

    k_max: int
    rows: tuple[VPowerRow, ...]
    tail_law: Optional[TailLaw]
    flags: dict = field(default_factory=dict)

    @property
    def v(self) -> list[int]:
        return [row.v for row in self.rows]

    @property
    def per_prime(self) -> dict[tuple[MonomialPrime, int], int]:
        return {
            (entry.prime, row.k): entry.v
            for row in self.rows
            for entry in row.per_prime
        }


def colon_module_gens(
    ideal: MonomialIdeal, prime: MonomialPrime
) -> tuple[Monomial, ...]:
    """Minimal monomial generators of the module (I : p)/I, sorted.

    These are the minimal generators of the colon ideal that escape I;
    divisibility-minimality keeps them outside m*(I : p), so they
    generate minimally.  Requires p associated to I.
    """
    if prime not in associated_primes(ideal):
        raise ValueError(f"{prime!r} is not an associated prime")
    quot = colon_ideal(ideal, prime)
    outside = ~member_mask(ideal.matrix, quot.matrix)
    return tuple(Monomial(ideal.context, row) for row in quot.matrix[outside])


def _scan_for_prime(
    ideal: MonomialIdeal, prime: MonomialPrime, candidates: Iterable[Monomial]
) -> Optional[VWitness]:
    target = prime.as_ideal().matrix
    for f in candidates:
        rows = colon_rows(ideal.matrix, f.vector())
        if rows.shape == target.shape and bool(np.array_equal(rows, target)):
            return VWitness(prime=prime, monomial=f, degree=f.degree)
    return None


def v_at_prime(
    ideal: MonomialIdeal, prime: MonomialPrime
) -> tuple[int, VWitness]:
    """v_p(I): least degree of a colon-module generator with (I : u) = p.

    The module generators are scanned in canonical (degree, lex) order,
    so the witness is the lex-least monomial of minimal degree.
    """
    gens = colon_module_gens(ideal, prime)  # validates p ∈ Ass(I)
    witness = _scan_for_prime(ideal, prime, gens)
    if witness is None:
        raise RuntimeError(
            f"no colon-module generator of {ideal!r} cuts out {prime!r}; "
            "this cannot happen for an associated prime"
        )
    return witness.degree, witness


def _prime_v_entry(ideal: MonomialIdeal, prime: MonomialPrime, k: int,
                   maximal_in_ass: bool) -> PrimeV:
    gens = colon_module_gens(ideal, prime)
    witness = _scan_for_prime(ideal, prime, gens)
    if witness is None:
        raise RuntimeError(
            f"no colon-module generator cuts out {prime!r}"
        )
    return PrimeV(
        prime=prime,
        k=k,
        v=witness.degree,
        alpha_module=min(g.degree for g in gens),
        maximal_in_ass=maximal_in_ass,
        witness=witness.monomial,
    )


def v_number(ideal: MonomialIdeal) -> tuple[int, VWitness]:
    """v(I) = min over associated primes of v_p(I), with its witness.

    Ties among equal-degree witnesses go to the lexicographically
    smallest exponent vector, then the smaller prime.
    """
    ass = associated_primes(ideal)  # validates proper nonzero
    best: Optional[VWitness] = None
    for p in ass:
        _, w = v_at_prime(ideal, p)
        if best is None or (
            (w.degree, w.monomial.exponents, w.prime.sort_key())
            < (best.degree, best.monomial.exponents, best.prime.sort_key())
        ):
            best = w
    return best.degree, best


def _monomials_of_degree(ideal_context, d: int) -> Iterable[Monomial]:
    n = ideal_context.n
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        yield Monomial(ideal_context, exps)


def v_oracle(ideal: MonomialIdeal) -> int:
    """Independent v-number: degree-by-degree brute force.

    Enumerates all monomials of degree 0, 1, 2, ... and returns the
    first degree at which some colon (I : f) is a monomial prime.  The
    scan is capped at the largest degree appearing in any colon module
    (I : p)/I over p in Ass(I), where a hit is guaranteed.
    """
    ass = associated_primes(ideal)
    cap = max(
        g.degree for p in ass for g in colon_module_gens(ideal, p)
    )
    ctx = ideal.context
    for d in range(cap + 1):
        for f in _monomials_of_degree(ctx, d):
            if ideal.contains(f):
                continue
            if prime_support_of_rows(colon_rows(ideal.matrix, f.vector())) is not None:
                return d
    raise RuntimeError("oracle cap exceeded; unreachable for proper nonzero ideals")


def _fit_tail(v_values: list[int], alpha: int) -> Optional[TailLaw]:
    diffs = [v - alpha * (k + 1) for k, v in enumerate(v_values)]
    start = len(diffs) - 1
    while start > 0 and diffs[start - 1] == diffs[-1]:
        start -= 1
    if len(diffs) - start < 2:
        return None
    return TailLaw(alpha=alpha, b=diffs[-1], start=start + 1)


def v_function(
    ideal: MonomialIdeal, k_max: int
) -> VReport:
    """The v-numbers of I, I^2, ..., I^{k_max} with per-prime tables.

    Each power is treated independently: its own associated primes, its
    own per-prime scan.  The tail law reports the longest window ending
    at k_max on which v(I^k) - alpha(I)*k is constant (length >= 2,
    equigenerated ideals only).  Flags carry the conjecture verdicts
    listed below; they are observations, never assertions.
    """
    if k_max < 1:
        raise ValueError("v_function expects K >= 1")
    st = stats(ideal)  # validates nonzero; unit rejected by associated_primes
    rows = []
    current = ideal
    for k in range(1, k_max + 1):
        if k > 1:
            current = multiply(current, ideal)
        ass = associated_primes(current)
        maximal = set(ass.max_primes)
        entries = tuple(
            _prime_v_entry(current, p, k, p in maximal) for p in ass
        )
        best = min(
            entries,
            key=lambda e: (e.v, e.witness.exponents, e.prime.sort_key()),
        )
        rows.append(
            VPowerRow(
                k=k,
                alpha=stats(current).alpha,
                v=best.v,
                witness=VWitness(
                    prime=best.prime, monomial=best.witness, degree=best.v
                ),
                per_prime=entries,
                embedded_free=not ass.embedded_primes,
            )
        )

    tail = _fit_tail([r.v for r in rows], st.alpha) if st.equigenerated else None

    band_offsets = tuple(r.v - r.alpha for r in rows)
    flags = {
        "lower_bound_ok": all(r.v >= r.alpha - 1 for r in rows),
        "band_offsets": band_offsets,
        "band_ok": all(off in (-1, 0) for off in band_offsets),
        "tail_b_ge_minus1": None if tail is None else tail.b >= -1,
        "linear_powers_all_k": (
            all(r.v == st.alpha * r.k - 1 for r in rows)
            if st.equigenerated
            else None
        ),
        "module_alpha_ok": all(
            e.v >= e.alpha_module
            and (not e.maximal_in_ass or e.v == e.alpha_module)
            for r in rows
            for e in r.per_prime
        ),
        "min_alpha_ok": all(
            r.v == min(e.alpha_module for e in r.per_prime)
            for r in rows
            if r.embedded_free
        ),
    }
    return VReport(k_max=k_max, rows=tuple(rows), tail_law=tail, flags=flags)


@dataclass(frozen=True)
class BoundSample:
    """One colon-bound sample v(I) <= v(I : f) + deg f."""

    monomial: Monomial
    skipped: bool  # f ∈ I carries no information
    lhs: Optional[int]
    rhs: Optional[int]
    ok: Optional[bool]


def check_bounds(
    ideal: MonomialIdeal, samples: Iterable[Monomial]
) -> dict:
    """Check v(I) <= v(I : f) + deg(f) per sample and v_p(I) >= alpha(I) - 1.

    Samples lying in I are skipped with a notice entry.  Returns a
    report dict with per-sample rows and the overall verdict.
    """
    v_i, _ = v_number(ideal)
    alpha = stats(ideal).alpha
    prime_rows = []
    for p in associated_primes(ideal):
        vp, _ = v_at_prime(ideal, p)
        prime_rows.append({"prime": p, "v": vp, "ok": vp >= alpha - 1})
    rows = []
    for f in samples:
        if ideal.contains(f):
            rows.append(
                BoundSample(monomial=f, skipped=True, lhs=None, rhs=None, ok=None)
            )
            continue
        quotient = colon_monomial(ideal, f)
        vq, _ = v_number(quotient)
        rhs = vq + f.degree
        rows.append(
            BoundSample(
                monomial=f, skipped=False, lhs=v_i, rhs=rhs, ok=v_i <= rhs
            )
        )
    ok = all(r.ok for r in rows if not r.skipped) and all(
        pr["ok"] for pr in prime_rows
    )
    return {
        "v": v_i,
        "alpha": alpha,
        "samples": rows,
        "prime_lower_bounds": prime_rows,
        "ok": ok,
    }
