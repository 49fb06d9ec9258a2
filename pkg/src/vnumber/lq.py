"""Linear quotients: certificates, searches, extension, small-scale sweeps.

An ordering u_1, ..., u_m of the minimal generators has linear
quotients when every colon (u_1, ..., u_{j-1}) : u_j is generated by
variables.  Whether a partial order can be completed depends only on
the *set* of already-placed generators, never on their arrangement, so
the searches below backtrack over prefix sets with a dead-state memo;
exhaustion is then certified even though no factorial orbit is walked.

Budgets count feasibility probes (colon computations).  A search that
stops on budget reports ``exhaustive=False``; only a search that ran
out of states may claim a definitive "no order exists".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations
from typing import Optional, Sequence

import numpy as np

from .core import (
    Monomial,
    MonomialIdeal,
    VarContext,
    canonical_rows,
    colon_rows,
    minimalize_rows,
    stats,
)


@dataclass(frozen=True)
class LQCheck:
    """Verdict of checking one explicit generator order."""

    ok: bool
    fail_step: Optional[int]  # 1-based position of the first failing generator
    fail_witness: Optional[Monomial]  # a non-variable minimal colon generator
    supports: Optional[tuple[frozenset[int], ...]]  # colon supports, steps 2..m


@dataclass(frozen=True)
class LQOrder:
    """A verified linear-quotients order with its per-step colon supports."""

    order: tuple[Monomial, ...]
    supports: tuple[frozenset[int], ...]  # entry j-2 belongs to step j

    @property
    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.order[0].context, self.order)

    def verify(self) -> bool:
        return is_lq_order(self.order).ok


@dataclass(frozen=True)
class ExtensionCertificate:
    """An order of G(J) \\ G(I) extending I to J by linear quotients."""

    base: MonomialIdeal
    target: MonomialIdeal
    added: tuple[Monomial, ...]
    supports: tuple[frozenset[int], ...]  # step j=1..r: (I, v_1..v_{j-1}) : v_j


@dataclass(frozen=True)
class LQSearch:
    """Outcome of find_lq_order: order or a certified/budgeted absence."""

    order: Optional[LQOrder]
    exhaustive: bool
    nodes: int


@dataclass(frozen=True)
class ExtensionSearch:
    """Outcome of extend_by_lq, with the same exhaustion semantics."""

    certificate: Optional[ExtensionCertificate]
    exhaustive: bool
    nodes: int


def _variable_support(rows: np.ndarray) -> Optional[frozenset[int]]:
    """Support if every minimal generator is a single variable, else None."""
    if rows.shape[0] == 0 or not bool((rows.sum(axis=1) == 1).all()):
        return None
    return frozenset(int(c) for c in np.nonzero(rows)[1])


def is_lq_order(gens: Sequence[Monomial]) -> LQCheck:
    """Check an explicit order for linear quotients.

    The generators must form an antichain under divisibility (a minimal
    generating set); otherwise ``ValueError``.  On failure the verdict
    carries the first failing step (1-based) and one offending colon
    generator of degree >= 2.  Lists of length <= 1 pass vacuously.
    """
    gens = tuple(gens)
    if len(gens) <= 1:
        return LQCheck(ok=True, fail_step=None, fail_witness=None, supports=())
    ctx = gens[0].context
    for g in gens:
        if g.context != ctx:
            raise ValueError("generators live in different variable contexts")
    matrix = np.array([g.exponents for g in gens], dtype=np.int64)
    if minimalize_rows(matrix).shape[0] != matrix.shape[0]:
        raise ValueError("generators must form an antichain (minimal system)")
    supports = []
    for j in range(1, len(gens)):
        rows = colon_rows(matrix[:j], matrix[j])
        supp = _variable_support(rows)
        if supp is None:
            bad = rows[rows.sum(axis=1) >= 2][0]
            return LQCheck(
                ok=False,
                fail_step=j + 1,
                fail_witness=Monomial(ctx, bad),
                supports=None,
            )
        supports.append(supp)
    return LQCheck(ok=True, fail_step=None, fail_witness=None,
                   supports=tuple(supports))


class _Budget:
    """Mutable probe counter shared across one search tree."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.limit is None or self.used <= self.limit

    @property
    def exceeded(self) -> bool:
        return self.limit is not None and self.used > self.limit


def _gcd_degree_table(matrix: np.ndarray) -> np.ndarray:
    return np.minimum(matrix[:, None, :], matrix[None, :, :]).sum(axis=2)


def _heuristic_order(cands, placed, degs, gcdd):
    """Candidates with many placed neighbors of codegree-1 gcd come first."""
    placed = list(placed)

    def score(r: int) -> tuple:
        near = sum(1 for b in placed if gcdd[r, b] == degs[r] - 1)
        return (-near, r)

    return sorted(cands, key=score)


def _lq_dfs(matrix, rows_order, budget):
    """Backtrack over prefix sets; return (per-step supports) or None.

    ``rows_order`` is filled with the chosen row order on success.  The
    dead-set memo keys on the prefix set, which fully determines every
    later colon.
    """
    m = matrix.shape[0]
    degs = matrix.sum(axis=1)
    gcdd = _gcd_degree_table(matrix)
    dead: set[frozenset[int]] = set()
    supports: list[frozenset[int]] = []

    def colon_support(placed_rows: list[int], r: int) -> Optional[frozenset[int]]:
        if not placed_rows:
            return frozenset()
        return _variable_support(colon_rows(matrix[placed_rows], matrix[r]))

    def rec(placed: list[int], placed_set: frozenset[int]) -> bool:
        if len(placed) == m:
            return True
        if placed_set in dead:
            return False
        remaining = [r for r in range(m) if r not in placed_set]
        for r in _heuristic_order(remaining, placed, degs, gcdd):
            if not budget.spend():
                return False
            supp = colon_support(placed, r)
            if supp is None:
                continue
            placed.append(r)
            supports.append(supp)
            if rec(placed, placed_set | {r}):
                return True
            placed.pop()
            supports.pop()
            if budget.exceeded:
                return False
        dead.add(placed_set)
        return False

    found = rec(rows_order, frozenset())
    return supports if found else None


def find_lq_order(
    ideal: MonomialIdeal, budget: Optional[int] = None
) -> LQSearch:
    """Search for a linear-quotients order of G(I).

    Returns the first order found (deterministic: heuristic score, then
    canonical generator index).  ``order=None`` with ``exhaustive=True``
    is a proof that no order exists; with ``exhaustive=False`` it only
    means the probe budget ran out.
    """
    if ideal.is_zero:
        raise ValueError("find_lq_order expects a nonzero ideal")
    if ideal.num_gens == 1:
        return LQSearch(
            order=LQOrder(order=ideal.gens, supports=()), exhaustive=True, nodes=0
        )
    bud = _Budget(budget)
    rows_order: list[int] = []
    supports = _lq_dfs(ideal.matrix, rows_order, bud)
    if supports is None:
        return LQSearch(order=None, exhaustive=not bud.exceeded, nodes=bud.used)
    gens = ideal.gens
    order = LQOrder(
        order=tuple(gens[r] for r in rows_order),
        supports=tuple(supports[1:]),  # the empty step-1 entry is dropped
    )
    return LQSearch(order=order, exhaustive=True, nodes=bud.used)


def extend_by_lq(
    base: LQOrder, target: MonomialIdeal, budget: Optional[int] = None
) -> ExtensionSearch:
    """Order G(J) \\ G(I) so every step's colon against the prefix is prime.

    Preconditions: the base order is verified, both ideals are
    equigenerated of the same degree, and G(I) is contained in G(J).
    Every step j >= 1 is constrained, including the first:
    (I : v_1) must already be variable-generated for the concatenated
    order to have linear quotients.
    """
    base_ideal = base.ideal
    ctx = base_ideal.context
    if ctx != target.context:
        raise ValueError("base and target live in different variable contexts")
    if not base.verify():
        raise ValueError("base order is not a linear-quotients order")
    st_base, st_target = stats(base_ideal), stats(target)
    if not (st_base.equigenerated and st_target.equigenerated):
        raise ValueError("extension requires equigenerated ideals")
    if st_base.alpha != st_target.alpha:
        raise ValueError("extension requires equal generation degrees")
    base_set = {g.exponents for g in base_ideal.gens}
    target_gens = target.gens
    if not base_set <= {g.exponents for g in target_gens}:
        raise ValueError("G(base) must be contained in G(target)")

    missing = [g for g in target_gens if g.exponents not in base_set]
    if not missing:
        return ExtensionSearch(
            certificate=ExtensionCertificate(
                base=base_ideal, target=target, added=(), supports=()
            ),
            exhaustive=True,
            nodes=0,
        )

    miss_matrix = np.array([g.exponents for g in missing], dtype=np.int64)
    base_matrix = base_ideal.matrix
    m = miss_matrix.shape[0]
    degs = miss_matrix.sum(axis=1)
    gcdd = _gcd_degree_table(miss_matrix)
    bud = _Budget(budget)
    dead: set[frozenset[int]] = set()
    chosen: list[int] = []
    supports: list[frozenset[int]] = []

    def rec(placed_set: frozenset[int]) -> bool:
        if len(chosen) == m:
            return True
        if placed_set in dead:
            return False
        # equigenerated distinct monomials form an antichain, so the
        # stacked prefix is already a minimal generating set
        prefix = (
            np.vstack([base_matrix, miss_matrix[chosen]])
            if chosen
            else base_matrix
        )
        remaining = [r for r in range(m) if r not in placed_set]
        for r in _heuristic_order(remaining, chosen, degs, gcdd):
            if not bud.spend():
                return False
            supp = _variable_support(colon_rows(prefix, miss_matrix[r]))
            if supp is None:
                continue
            chosen.append(r)
            supports.append(supp)
            if rec(placed_set | {r}):
                return True
            chosen.pop()
            supports.pop()
            if bud.exceeded:
                return False
        dead.add(placed_set)
        return False

    if rec(frozenset()):
        cert = ExtensionCertificate(
            base=base_ideal,
            target=target,
            added=tuple(missing[r] for r in chosen),
            supports=tuple(supports),
        )
        return ExtensionSearch(certificate=cert, exhaustive=True, nodes=bud.used)
    return ExtensionSearch(
        certificate=None, exhaustive=not bud.exceeded, nodes=bud.used
    )


# ---------------------------------------------------------------------------
# small-scale conjecture sweeps


def _squarefree_degree_d(ctx: VarContext, d: int) -> list[Monomial]:
    out = []
    for combo in combinations(range(ctx.n), d):
        exps = [0] * ctx.n
        for i in combo:
            exps[i] = 1
        out.append(Monomial(ctx, exps))
    return out


def _all_degree_d(ctx: VarContext, d: int) -> list[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(ctx.n), d):
        exps = [0] * ctx.n
        for i in combo:
            exps[i] += 1
        out.append(Monomial(ctx, exps))
    return out


def _canonical_subset(subset: tuple[tuple[int, ...], ...], perms) -> tuple:
    """Lex-least image of a set of exponent tuples under S_n."""
    best = None
    for perm in perms:
        image = tuple(
            sorted(tuple(exps[perm[i]] for i in range(len(perm))) for exps in subset)
        )
        if best is None or image < best:
            best = image
    return best


def simon_search(
    n: int, d: int, mode: str, budget: Optional[int] = None
) -> dict:
    """Sweep all LQ subideals of the target for extension failures.

    The target is the full squarefree-degree-d ideal (``squarefree``
    mode) or the d-th power of the maximal ideal (``monomial`` mode).
    Nonempty generator subsets are enumerated once per
    variable-permutation class; each subset admitting a linear-quotients
    order is extended toward the target.  An LQ subset whose extension
    search exhausts without a certificate is a counterexample for this
    instance and is reported with a full reproducer.

    The report is JSON-ready: {n, d, mode, subsets_enumerated,
    lq_ideals, extended, counterexamples, exhaustive}.
    """
    if mode not in ("squarefree", "monomial"):
        raise ValueError("mode must be 'squarefree' or 'monomial'")
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if mode == "squarefree" and d > n:
        raise ValueError("squarefree mode needs d <= n")
    ctx = VarContext([f"x{i+1}" for i in range(n)])
    gens = (
        _squarefree_degree_d(ctx, d) if mode == "squarefree" else _all_degree_d(ctx, d)
    )
    target = MonomialIdeal(ctx, gens)
    perms = list(permutations(range(n)))
    bud = _Budget(budget)

    seen: set[tuple] = set()
    enumerated = 0
    lq_ideals = 0
    extended = 0
    counterexamples: list[dict] = []
    exhaustive = True

    for size in range(1, len(gens) + 1):
        for picks in combinations(range(len(gens)), size):
            if bud.exceeded:
                exhaustive = False
                break
            subset = tuple(gens[i].exponents for i in picks)
            canon = _canonical_subset(subset, perms)
            if canon in seen:
                continue
            seen.add(canon)
            enumerated += 1
            ideal = MonomialIdeal(ctx, [gens[i] for i in picks])
            remaining = None if bud.limit is None else max(0, bud.limit - bud.used)
            found = find_lq_order(ideal, budget=remaining)
            bud.used += found.nodes
            if found.order is None:
                if not found.exhaustive:
                    exhaustive = False
                continue
            lq_ideals += 1
            remaining = None if bud.limit is None else max(0, bud.limit - bud.used)
            ext = extend_by_lq(found.order, target, budget=remaining)
            bud.used += ext.nodes
            if ext.certificate is not None:
                extended += 1
            elif ext.exhaustive:
                counterexamples.append(
                    {
                        "mode": mode,
                        "n": n,
                        "d": d,
                        "gens": [str(g) for g in ideal.gens],
                        "lq_order": [str(g) for g in found.order.order],
                    }
                )
            else:
                exhaustive = False
        if bud.exceeded:
            exhaustive = False
            break

    return {
        "n": n,
        "d": d,
        "mode": mode,
        "subsets_enumerated": enumerated,
        "lq_ideals": lq_ideals,
        "extended": extended,
        "counterexamples": counterexamples,
        "exhaustive": exhaustive,
    }


def lq_polarization_transfer(ideal: MonomialIdeal, order: LQOrder) -> bool:
    """Whether the polarized order is a linear-quotients order of I^p.

    The order must be a verified order for the given ideal (checked);
    the claim that the transfer always succeeds is exercised by tests.
    """
    from .polar import polarize

    if order.ideal != ideal:
        raise ValueError("order does not generate the given ideal")
    if not order.verify():
        raise ValueError("order is not a linear-quotients order")
    pol = polarize(ideal)
    image = [pol.polarize_monomial(g) for g in order.order]
    return is_lq_order(image).ok


def linear_powers_certificate(
    ideal: MonomialIdeal, k_max: int, budget: Optional[int] = None
) -> tuple[LQSearch, ...]:
    """find_lq_order on each power I^k, k = 1..k_max.

    A full row of certificates certifies linear powers up to k_max via
    quotients; a miss at some k is only "no certificate found", never a
    disproof of linear resolution.
    """
    from .core import multiply

    if k_max < 1:
        raise ValueError("linear_powers_certificate expects K >= 1")
    if not stats(ideal).equigenerated:
        raise ValueError("linear powers are tracked for equigenerated ideals")
    out = []
    current = ideal
    for k in range(1, k_max + 1):
        if k > 1:
            current = multiply(current, ideal)
        out.append(find_lq_order(current, budget=budget))
    return tuple(out)
