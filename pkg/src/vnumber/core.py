"""Monomial ideals over an ordered variable context.

The ground representation is the exponent vector: a monomial is a row
of nonnegative int64 exponents, an ideal is the antichain of its
minimal generators, stored as a canonical matrix (rows unique, sorted
by total degree then lexicographically).  Every operation reduces to
componentwise integer arithmetic plus divisibility sweeps, which are
delegated to :mod:`vnumber.kernels`.

Two objects interoperate only when their :class:`VarContext` labels are
equal as tuples; mixing contexts raises ``ValueError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

import numpy as np

from . import kernels

# exponents stay below this bound so sums of a few of them fit in int64
EXPONENT_LIMIT = 1 << 31


# ---------------------------------------------------------------------------
# matrix-level helpers (shared by the higher modules)


def canonical_rows(rows: np.ndarray) -> np.ndarray:
    """Return unique rows sorted by (total degree, lex), as a new array."""
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        raise ValueError("expected a 2-d exponent array")
    if rows.shape[0] <= 1:
        return rows.copy()
    rows = np.unique(rows, axis=0)
    order = np.argsort(rows.sum(axis=1), kind="stable")
    return np.ascontiguousarray(rows[order])


def minimalize_rows(rows: np.ndarray) -> np.ndarray:
    """Canonical matrix of the divisibility-minimal rows."""
    rows = canonical_rows(rows)
    if rows.shape[0] <= 1:
        return rows
    mask = kernels.antichain_mask(rows)
    return np.ascontiguousarray(rows[mask])


def member_mask(gens: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Boolean mask: which rows lie in the ideal generated by ``gens``."""
    if rows.shape[0] == 0 or gens.shape[0] == 0:
        return np.zeros(rows.shape[0], dtype=np.bool_)
    return kernels.member_mask(
        np.ascontiguousarray(gens), np.ascontiguousarray(rows)
    )


def any_divides(gens: np.ndarray, f: np.ndarray) -> bool:
    """Whether some generator row divides the exponent vector ``f``."""
    if gens.shape[0] == 0:
        return False
    return kernels.any_divides(
        np.ascontiguousarray(gens), np.ascontiguousarray(f, dtype=np.int64)
    )


def colon_rows(gens: np.ndarray, f: np.ndarray) -> np.ndarray:
    """Minimal generators of (I : f) from minimal generators of I."""
    if gens.shape[0] == 0:
        return gens.copy()
    return minimalize_rows(np.maximum(gens - f, 0))


def intersect_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minimal generators of the intersection (pairwise lcm sweep)."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    n = a.shape[1]
    cand = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, n)
    return minimalize_rows(cand)


def product_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minimal generators of the product (pairwise sum sweep)."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    if int(a.max()) + int(b.max()) >= EXPONENT_LIMIT:
        raise OverflowError("exponent limit exceeded in ideal product")
    n = a.shape[1]
    cand = (a[:, None, :] + b[None, :, :]).reshape(-1, n)
    return minimalize_rows(cand)


def rows_equal(a: np.ndarray, b: np.ndarray) -> bool:
    """Equality of two canonical matrices."""
    return a.shape == b.shape and bool(np.array_equal(a, b))


def prime_support_of_rows(rows: np.ndarray) -> Optional[tuple[int, ...]]:
    """If every row is a distinct variable, the sorted variable indices.

    Canonical matrices satisfy the distinctness for free, so this tests
    whether the matrix presents a monomial prime.  Returns ``None``
    otherwise (including for the zero and unit matrices).
    """
    if rows.shape[0] == 0:
        return None
    if not bool((rows.sum(axis=1) == 1).all()):
        return None
    cols = np.nonzero(rows)[1]
    return tuple(sorted(int(c) for c in cols))


# ---------------------------------------------------------------------------
# contexts and monomials


class VarContext:
    """An ordered tuple of distinct variable labels.

    The label tuple is the identity: two contexts compare equal exactly
    when their tuples match, and only equal contexts interoperate.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("a variable context needs at least one variable")
        index: dict[str, int] = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise ValueError("variable labels must be nonempty strings")
            if "^" in name or any(ch.isspace() for ch in name):
                raise ValueError(f"bad variable label {name!r}")
            if name in index:
                raise ValueError(f"duplicate variable label {name!r}")
            index[name] = i
        self.names = names
        self._index = index

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown variable {label!r}") from None

    def variable(self, i: Union[int, str]) -> "Monomial":
        if isinstance(i, str):
            i = self.index(i)
        exps = [0] * self.n
        exps[i] = 1
        return Monomial(self, exps)

    def variables(self) -> tuple["Monomial", ...]:
        return tuple(self.variable(i) for i in range(self.n))

    def unit(self) -> "Monomial":
        return Monomial(self, [0] * self.n)

    def monomial(self, exponents: Union[Mapping[str, int], Sequence[int]]) -> "Monomial":
        if isinstance(exponents, Mapping):
            exps = [0] * self.n
            for label, e in exponents.items():
                exps[self.index(label)] += int(e)
            return Monomial(self, exps)
        return Monomial(self, exponents)

    def maximal_prime(self) -> "MonomialPrime":
        return MonomialPrime(self, range(self.n))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarContext) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return "VarContext(%s)" % " ".join(self.names)


def _same_context(a, b) -> VarContext:
    if a.context != b.context:
        raise ValueError("operands live in different variable contexts")
    return a.context


class Monomial:
    """A monomial as a tuple of nonnegative exponents in a context."""

    __slots__ = ("context", "exponents")

    def __init__(self, context: VarContext, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if len(exps) != context.n:
            raise ValueError(
                f"expected {context.n} exponents, got {len(exps)}"
            )
        for e in exps:
            if e < 0:
                raise ValueError("negative exponent")
            if e >= EXPONENT_LIMIT:
                raise OverflowError("exponent limit exceeded")
        self.context = context
        self.exponents = exps

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e > 0)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    def vector(self) -> np.ndarray:
        return np.array(self.exponents, dtype=np.int64)

    def divides(self, other: "Monomial") -> bool:
        _same_context(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        ctx = _same_context(self, other)
        return Monomial(ctx, map(max, self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        ctx = _same_context(self, other)
        return Monomial(ctx, map(min, self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        ctx = _same_context(self, other)
        return Monomial(ctx, (a + b for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self) -> tuple:
        return (self.degree, self.exponents)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Monomial)
            and self.context == other.context
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return hash((self.context.names, self.exponents))

    def __lt__(self, other: "Monomial") -> bool:
        _same_context(self, other)
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for name, e in zip(self.context.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


# ---------------------------------------------------------------------------
# ideals and primes


class MonomialIdeal:
    """A monomial ideal held as the canonical matrix of minimal generators.

    The empty matrix is the zero ideal; the single all-zero row is the
    unit ideal.  Construction minimalizes, so equal ideals always carry
    identical matrices and compare equal.
    """

    __slots__ = ("context", "matrix", "_hash")

    def __init__(self, context: VarContext, monomials: Iterable[Monomial] = ()):
        rows = []
        for f in monomials:
            if f.context != context:
                raise ValueError("generator from a different variable context")
            rows.append(f.exponents)
        matrix = minimalize_rows(
            np.array(rows, dtype=np.int64).reshape(len(rows), context.n)
        )
        matrix.setflags(write=False)
        self.context = context
        self.matrix = matrix
        self._hash = None

    @classmethod
    def _trusted(cls, context: VarContext, canonical_matrix: np.ndarray) -> "MonomialIdeal":
        ideal = cls.__new__(cls)
        canonical_matrix.setflags(write=False)
        ideal.context = context
        ideal.matrix = canonical_matrix
        ideal._hash = None
        return ideal

    @classmethod
    def from_exponents(cls, context: VarContext, rows) -> "MonomialIdeal":
        rows = np.array(rows, dtype=np.int64).reshape(-1, context.n)
        if rows.size and (rows.min() < 0 or rows.max() >= EXPONENT_LIMIT):
            raise ValueError("exponents out of range")
        return cls._trusted(context, minimalize_rows(rows))

    @classmethod
    def zero(cls, context: VarContext) -> "MonomialIdeal":
        return cls._trusted(context, np.zeros((0, context.n), dtype=np.int64))

    @classmethod
    def unit(cls, context: VarContext) -> "MonomialIdeal":
        return cls._trusted(context, np.zeros((1, context.n), dtype=np.int64))

    @property
    def num_gens(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.context, row) for row in self.matrix)

    @property
    def is_zero(self) -> bool:
        return self.matrix.shape[0] == 0

    @property
    def is_unit(self) -> bool:
        return self.matrix.shape[0] == 1 and not self.matrix.any()

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    def contains(self, f: Monomial) -> bool:
        _same_context(self, f)
        return any_divides(self.matrix, f.vector())

    def __contains__(self, f: Monomial) -> bool:
        return self.contains(f)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        _same_context(self, other)
        return bool(member_mask(self.matrix, other.matrix).all())

    def as_prime(self) -> Optional["MonomialPrime"]:
        supp = prime_support_of_rows(self.matrix)
        if supp is None:
            return None
        return MonomialPrime(self.context, supp)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.context == other.context
            and rows_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self.context.names, self.matrix.shape, self.matrix.tobytes())
            )
        return self._hash

    def __repr__(self) -> str:
        if self.is_zero:
            return "MonomialIdeal(0)"
        shown = [str(f) for f in self.gens[:8]]
        if self.num_gens > 8:
            shown.append(f"... {self.num_gens} gens")
        return "MonomialIdeal(%s)" % ", ".join(shown)


class MonomialPrime:
    """A prime generated by a nonempty set of variables."""

    __slots__ = ("context", "support")

    def __init__(self, context: VarContext, variables: Iterable[Union[int, str]]):
        support = set()
        for v in variables:
            i = context.index(v) if isinstance(v, str) else int(v)
            if not 0 <= i < context.n:
                raise ValueError(f"variable index {i} out of range")
            support.add(i)
        if not support:
            raise ValueError("a monomial prime needs at least one variable")
        self.context = context
        self.support = frozenset(support)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.support))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.context.names[i] for i in self.indices)

    def as_ideal(self) -> MonomialIdeal:
        rows = np.zeros((len(self.support), self.context.n), dtype=np.int64)
        for r, i in enumerate(self.indices):
            rows[r, i] = 1
        return MonomialIdeal._trusted(self.context, canonical_rows(rows))

    def is_maximal(self) -> bool:
        return len(self.support) == self.context.n

    def sort_key(self) -> tuple:
        return (len(self.support), self.indices)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialPrime)
            and self.context == other.context
            and self.support == other.support
        )

    def __hash__(self) -> int:
        return hash((self.context.names, self.support))

    def __lt__(self, other: "MonomialPrime") -> bool:
        _same_context(self, other)
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return "MonomialPrime(%s)" % ", ".join(self.labels)


@dataclass(frozen=True)
class IdealStats:
    """Degree profile of a nonzero monomial ideal."""

    alpha: int
    omega: int
    degvec: tuple[int, ...]
    equigenerated: bool
    squarefree: bool


# ---------------------------------------------------------------------------
# the ideal operations


def minimalize(
    monomials: Iterable[Monomial], context: Optional[VarContext] = None
) -> MonomialIdeal:
    """The ideal minimally generated by the given monomials.

    An empty collection yields the zero ideal and then requires an
    explicit ``context``.
    """
    monomials = tuple(monomials)
    if not monomials:
        if context is None:
            raise ValueError("empty generating set needs an explicit context")
        return MonomialIdeal.zero(context)
    ctx = context if context is not None else monomials[0].context
    return MonomialIdeal(ctx, monomials)


def contains(ideal: MonomialIdeal, f: Monomial) -> bool:
    """Membership: some minimal generator divides ``f``."""
    return ideal.contains(f)


def colon_monomial(ideal: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """The colon ideal (I : f) for a single monomial ``f``."""
    _same_context(ideal, f)
    return MonomialIdeal._trusted(
        ideal.context, colon_rows(ideal.matrix, f.vector())
    )


def colon_ideal(
    ideal: MonomialIdeal, other: Union[MonomialIdeal, MonomialPrime]
) -> MonomialIdeal:
    """The colon ideal (I : J), folded over the generators of J.

    A :class:`MonomialPrime` is accepted for J.  The empty fold gives
    the unit ideal, matching (I : 0) = (1).
    """
    if isinstance(other, MonomialPrime):
        other = other.as_ideal()
    _same_context(ideal, other)
    result: Optional[np.ndarray] = None
    for f in other.matrix:
        q = colon_rows(ideal.matrix, f)
        result = q if result is None else intersect_rows(result, q)
        if result.shape[0] == 0:
            break
    if result is None:
        return MonomialIdeal.unit(ideal.context)
    return MonomialIdeal._trusted(ideal.context, result)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The intersection, via the pairwise-lcm generator sweep."""
    _same_context(a, b)
    return MonomialIdeal._trusted(a.context, intersect_rows(a.matrix, b.matrix))


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The product, via the pairwise-sum generator sweep."""
    _same_context(a, b)
    return MonomialIdeal._trusted(a.context, product_rows(a.matrix, b.matrix))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """The k-th power for k >= 1, by square and multiply."""
    k = int(k)
    if k < 1:
        raise ValueError("power expects k >= 1")
    result = None
    base = ideal
    while True:
        if k & 1:
            result = base if result is None else multiply(result, base)
        k >>= 1
        if k == 0:
            return result
        base = multiply(base, base)


def stats(ideal: MonomialIdeal) -> IdealStats:
    """Degree statistics of a nonzero ideal (zero ideal is an error)."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no degree statistics")
    degrees = ideal.matrix.sum(axis=1)
    alpha = int(degrees.min())
    omega = int(degrees.max())
    degvec = tuple(int(e) for e in ideal.matrix.max(axis=0))
    return IdealStats(
        alpha=alpha,
        omega=omega,
        degvec=degvec,
        equigenerated=alpha == omega,
        squarefree=bool((ideal.matrix <= 1).all()),
    )


def bounding_box(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Componentwise max of the generator exponents (zeros for zero/unit)."""
    if ideal.matrix.shape[0] == 0:
        return (0,) * ideal.context.n
    return tuple(int(e) for e in ideal.matrix.max(axis=0))
