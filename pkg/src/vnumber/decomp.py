"""Irreducible decomposition and associated primes of monomial ideals.

Two independent routes are implemented on purpose.  The splitting
recursion produces the unique irredundant irreducible decomposition,
whose component radicals are exactly the associated primes; it is exact
but can branch heavily on large powers.  ``associated_primes`` instead
tests each candidate support A directly: p_A is associated iff the
localization of I at A (generators restricted to the columns of A) has
a nonzero socle, i.e. iff coloning out the restricted maximal ideal
moves the restricted ideal.  For squarefree ideals the sweep collapses
further: the associated primes are the inclusion-minimal covers of the
generator supports.  The test suite holds the routes equal on a shared
corpus, together with a brute-force colon oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product
from typing import Iterable, Iterator, Optional

import numpy as np

from .core import (
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    canonical_rows,
    colon_rows,
    intersect_rows,
    member_mask,
    minimalize_rows,
    prime_support_of_rows,
    rows_equal,
    stats,
)

ORACLE_CANDIDATE_CAP = 2_000_000


@dataclass(frozen=True)
class IrreducibleComponent:
    """An irreducible ideal: pure variable powers (x_i^{e_i} : i in A).

    ``powers`` is the sorted tuple of (variable index, exponent >= 1).
    """

    context: VarContext
    powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.powers:
            raise ValueError("an irreducible component needs at least one power")
        seen = set()
        for i, e in self.powers:
            if not 0 <= i < self.context.n:
                raise ValueError(f"variable index {i} out of range")
            if e < 1:
                raise ValueError("pure-power exponents must be >= 1")
            if i in seen:
                raise ValueError("repeated variable in irreducible component")
            seen.add(i)
        if self.powers != tuple(sorted(self.powers)):
            raise ValueError("powers must be sorted by variable index")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.powers)

    @property
    def prime(self) -> MonomialPrime:
        return MonomialPrime(self.context, self.support)

    def as_ideal(self) -> MonomialIdeal:
        rows = np.zeros((len(self.powers), self.context.n), dtype=np.int64)
        for r, (i, e) in enumerate(self.powers):
            rows[r, i] = e
        return MonomialIdeal._trusted(self.context, canonical_rows(rows))

    def sort_key(self) -> tuple:
        return (len(self.powers), self.powers)

    def __repr__(self) -> str:
        inside = ", ".join(
            self.context.names[i] if e == 1 else f"{self.context.names[i]}^{e}"
            for i, e in self.powers
        )
        return f"IrreducibleComponent({inside})"


@dataclass(frozen=True)
class AssSet:
    """The associated primes of an ideal, sorted canonically."""

    context: VarContext
    primes: tuple[MonomialPrime, ...]

    @property
    def minimal_primes(self) -> tuple[MonomialPrime, ...]:
        return tuple(
            p
            for p in self.primes
            if not any(q is not p and q.support < p.support for q in self.primes)
        )

    @property
    def embedded_primes(self) -> tuple[MonomialPrime, ...]:
        minimal = set(self.minimal_primes)
        return tuple(p for p in self.primes if p not in minimal)

    @property
    def max_primes(self) -> tuple[MonomialPrime, ...]:
        return tuple(
            p
            for p in self.primes
            if not any(q is not p and q.support > p.support for q in self.primes)
        )

    def __iter__(self) -> Iterator[MonomialPrime]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p: MonomialPrime) -> bool:
        return p in self.primes

    def support_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(p.support for p in self.primes)


def _require_proper(ideal: MonomialIdeal, what: str) -> None:
    if ideal.is_zero:
        raise ValueError(f"{what} is undefined for the zero ideal")
    if ideal.is_unit:
        raise ValueError(f"{what} is undefined for the unit ideal")


# ---------------------------------------------------------------------------
# irreducible decomposition by coprime splitting


def _split_rec(matrix: np.ndarray, memo: dict) -> frozenset:
    key = matrix.tobytes()
    hit = memo.get(key)
    if hit is not None:
        return hit
    split_row = -1
    for r in range(matrix.shape[0]):
        if np.count_nonzero(matrix[r]) >= 2:
            split_row = r
            break
    if split_row < 0:
        # every generator is a pure power of a distinct variable
        comp = tuple(
            sorted((int(c), int(matrix[r, c])) for r, c in zip(*np.nonzero(matrix)))
        )
        result = frozenset({comp})
    else:
        row = matrix[split_row]
        i = int(np.nonzero(row)[0][0])
        head = np.zeros_like(row)
        head[i] = row[i]
        tail = row.copy()
        tail[i] = 0
        left = minimalize_rows(np.vstack([matrix, head[None, :]]))
        right = minimalize_rows(np.vstack([matrix, tail[None, :]]))
        result = _split_rec(left, memo) | _split_rec(right, memo)
    memo[key] = result
    return result


_DECOMP_MEMO: dict = {}


def irreducible_decomposition(
    ideal: MonomialIdeal,
) -> tuple[IrreducibleComponent, ...]:
    """The unique irredundant decomposition into irreducible ideals.

    Splits a generator u = x_i^a * w into the coprime pair (x_i^a, w),
    recursing until every generator is a pure power, then prunes
    components redundant against the intersection of the others.
    Results are memoized per canonical ideal across a run.
    """
    _require_proper(ideal, "irreducible decomposition")
    cache_key = (ideal.context.names, ideal.matrix.tobytes())
    cached = _DECOMP_MEMO.get(cache_key)
    if cached is not None:
        return cached

    raw = _split_rec(ideal.matrix, {})
    comps = sorted(
        (IrreducibleComponent(ideal.context, powers) for powers in raw),
        key=IrreducibleComponent.sort_key,
    )

    # drop any component containing another one outright
    ideals = [c.as_ideal() for c in comps]
    keep = [
        i
        for i in range(len(comps))
        if not any(
            j != i and ideals[i].contains_ideal(ideals[j])
            for j in range(len(comps))
        )
    ]
    comps = [comps[i] for i in keep]
    ideals = [ideals[i] for i in keep]

    # prune to the irredundant decomposition
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for i in range(len(comps)):
            rest = None
            for j in range(len(comps)):
                if j == i:
                    continue
                rest = (
                    ideals[j].matrix
                    if rest is None
                    else intersect_rows(rest, ideals[j].matrix)
                )
            if bool(member_mask(ideals[i].matrix, rest).all()):
                del comps[i]
                del ideals[i]
                changed = True
                break

    result = tuple(comps)
    if len(_DECOMP_MEMO) > 50_000:
        _DECOMP_MEMO.clear()
    _DECOMP_MEMO[cache_key] = result
    return result


# ---------------------------------------------------------------------------
# associated primes


def _minimal_covers(supports: list[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-minimal transversals of a family of nonempty sets."""
    covers: list[frozenset[int]] = [frozenset()]
    for s in sorted(supports, key=lambda t: (len(t), sorted(t))):
        nxt = []
        for c in covers:
            if c & s:
                nxt.append(c)
            else:
                nxt.extend(c | {v} for v in sorted(s))
        nxt.sort(key=len)
        pruned: list[frozenset[int]] = []
        for c in nxt:
            if not any(p <= c for p in pruned):
                pruned.append(c)
        covers = pruned
    return covers


def _localization_is_depth_zero(matrix: np.ndarray, support: tuple[int, ...]) -> bool:
    """Whether p_A is associated, by the socle test on the localization.

    Restricting every generator to the columns of A presents the
    localized ideal I_A inside the polynomial ring on A; then p_A is
    associated to I iff (I_A : m_A) != I_A.
    """
    loc = matrix.copy()
    off = np.ones(matrix.shape[1], dtype=bool)
    off[list(support)] = False
    loc[:, off] = 0
    loc = minimalize_rows(loc)
    if loc.shape[0] == 1 and not loc.any():
        return False  # localization is the unit ideal
    quot: Optional[np.ndarray] = None
    for i in support:
        f = np.zeros(matrix.shape[1], dtype=np.int64)
        f[i] = 1
        q = colon_rows(loc, f)
        quot = q if quot is None else intersect_rows(quot, q)
        if rows_equal(quot, loc):
            return False  # already shrunk to I_A, further colons keep it
    return not rows_equal(quot, loc)


def _subsets_between(supp: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for bits in range(1, 1 << len(supp)):
        yield tuple(supp[i] for i in range(len(supp)) if bits >> i & 1)


@lru_cache(maxsize=32768)
def _associated_primes_cached(ideal: MonomialIdeal) -> AssSet:
    ctx = ideal.context
    st = stats(ideal)
    if st.squarefree:
        supports = [
            frozenset(int(c) for c in np.nonzero(row)[0]) for row in ideal.matrix
        ]
        found = _minimal_covers(supports)
    else:
        supp = tuple(int(c) for c in np.nonzero(ideal.matrix.any(axis=0))[0])
        found = [
            frozenset(a)
            for a in _subsets_between(supp)
            if _localization_is_depth_zero(ideal.matrix, a)
        ]
    primes = sorted(
        (MonomialPrime(ctx, a) for a in found), key=MonomialPrime.sort_key
    )
    return AssSet(context=ctx, primes=tuple(primes))


def associated_primes(ideal: MonomialIdeal) -> AssSet:
    """Ass(I) of a nonzero proper ideal.

    Squarefree ideals take the minimal-cover route (no embedded primes
    exist); otherwise each support subset gets the localization socle
    test.  Memoized per ideal.
    """
    _require_proper(ideal, "the set of associated primes")
    return _associated_primes_cached(ideal)


def ass_from_decomposition(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Supports of the irredundant irreducible decomposition.

    Equals Ass(I); kept as an independent cross-check route.
    """
    return frozenset(c.prime for c in irreducible_decomposition(ideal))


def ass_oracle(
    ideal: MonomialIdeal, box: Optional[Iterable[int]] = None
) -> frozenset[MonomialPrime]:
    """Brute-force Ass(I): collect prime colon ideals (I : f) over a box.

    Scans every monomial f with exponents inside ``box`` (componentwise;
    default: the bounding multidegree of I) and keeps the supports of
    the prime-valued colons.  Complete whenever the box dominates the
    bounding multidegree.
    """
    _require_proper(ideal, "ass_oracle")
    ctx = ideal.context
    if box is None:
        box = tuple(int(e) for e in ideal.matrix.max(axis=0))
    else:
        box = tuple(int(b) for b in box)
        if len(box) != ctx.n or any(b < 0 for b in box):
            raise ValueError("box must give one nonnegative bound per variable")
    total = 1
    for b in box:
        total *= b + 1
        if total > ORACLE_CANDIDATE_CAP:
            raise ValueError("oracle box too large to enumerate")
    out = set()
    for exps in iter_product(*(range(b + 1) for b in box)):
        f = np.array(exps, dtype=np.int64)
        supp = prime_support_of_rows(colon_rows(ideal.matrix, f))
        if supp is not None:
            out.add(MonomialPrime(ctx, supp))
    return frozenset(out)


def has_depth_zero(ideal: MonomialIdeal) -> bool:
    """Whether the quotient by I has depth zero.

    Equivalent statements: the full maximal prime is associated, and
    (I : m) != I.  The implementation asks the localization test at the
    full support, which is exactly that colon comparison.
    """
    _require_proper(ideal, "has_depth_zero")
    allvars = tuple(range(ideal.context.n))
    return _localization_is_depth_zero(ideal.matrix, allvars)


@dataclass(frozen=True)
class AssPowers:
    """Associated primes of I^k for k = 1..K."""

    sets: tuple[AssSet, ...]
    stabilized_at_end: Optional[bool]  # None when only one power was seen

    def __iter__(self) -> Iterator[AssSet]:
        return iter(self.sets)


def ass_powers(ideal: MonomialIdeal, k_max: int) -> AssPowers:
    """Ass(I^k) for k = 1..k_max plus a tail-agreement flag.

    The flag compares only the last two sets; with k_max = 1 there is
    nothing to compare and it stays ``None``.
    """
    from .core import multiply

    if k_max < 1:
        raise ValueError("ass_powers expects k_max >= 1")
    _require_proper(ideal, "ass_powers")
    sets = []
    current = ideal
    for k in range(1, k_max + 1):
        if k > 1:
            current = multiply(current, ideal)
        sets.append(associated_primes(current))
    stabilized = None
    if k_max >= 2:
        stabilized = sets[-1].support_sets() == sets[-2].support_sets()
    return AssPowers(sets=tuple(sets), stabilized_at_end=stabilized)
