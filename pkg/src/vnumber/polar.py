"""Polarization of monomial ideals and the v-number correspondence.

Polarizing expands every power x_i^b occurring in a generator into b
distinct target variables x_i_1, ..., x_i_b; the result is squarefree
and the specialization map sends each copy back to its source
variable.  The target context is sized by the bounding multidegree of
the specific ideal: a source variable of degree b gets exactly b
copies, and unused variables get none.

``verify_polarization_theorem`` recomputes both sides of the four-part
correspondence (associated-prime fibers, per-prime inequality and
fiber minimum, global v equality) and reports each verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    minimalize_rows,
)
from .decomp import associated_primes
from .vnum import v_at_prime, v_number


@dataclass(frozen=True)
class Polarization:
    """A polarized ideal together with its variable bookkeeping.

    ``var_map[t]`` is the source index of target column t; ``blocks[i]``
    lists the target columns of source variable i in ascending copy
    order (empty when the variable occurs in no generator).
    """

    source: VarContext
    target: VarContext
    ideal: MonomialIdeal
    var_map: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def polarize_monomial(self, f: Monomial) -> Monomial:
        """The squarefree expansion of f; f must fit inside the blocks."""
        if f.context != self.source:
            raise ValueError("monomial lives outside the source context")
        exps = [0] * self.target.n
        for i, e in enumerate(f.exponents):
            if e > len(self.blocks[i]):
                raise ValueError(
                    f"exponent {e} of {self.source.names[i]} exceeds its "
                    f"{len(self.blocks[i])} polarization copies"
                )
            for t in self.blocks[i][:e]:
                exps[t] = 1
        return Monomial(self.target, exps)

    def specialize_monomial(self, f: Monomial) -> Monomial:
        if f.context != self.target:
            raise ValueError("monomial lives outside the target context")
        exps = [0] * self.source.n
        for t, e in enumerate(f.exponents):
            exps[self.var_map[t]] += e
        return Monomial(self.source, exps)

    def specialize_prime(self, p: MonomialPrime) -> MonomialPrime:
        if p.context != self.target:
            raise ValueError("prime lives outside the target context")
        return MonomialPrime(self.source, {self.var_map[t] for t in p.support})

    def specialize_ideal(self, ideal: MonomialIdeal) -> MonomialIdeal:
        if ideal.context != self.target:
            raise ValueError("ideal lives outside the target context")
        rows = np.zeros((ideal.matrix.shape[0], self.source.n), dtype=np.int64)
        for t in range(self.target.n):
            rows[:, self.var_map[t]] += ideal.matrix[:, t]
        return MonomialIdeal._trusted(self.source, minimalize_rows(rows))


def polarize(ideal: MonomialIdeal) -> Polarization:
    """The standard polarization of a nonzero ideal.

    Source variable i contributes deg_{x_i}(I) target copies labeled
    ``<name>_1 .. <name>_b``, blocks ordered by source index.  For the
    unit ideal (all-zero bounding multidegree) each variable keeps one
    copy so the target context stays inhabited.
    """
    if ideal.is_zero:
        raise ValueError("polarize expects a nonzero ideal")
    ctx = ideal.context
    box = ideal.matrix.max(axis=0)
    if not box.any():
        box = np.ones(ctx.n, dtype=np.int64)
    names: list[str] = []
    var_map: list[int] = []
    blocks: list[tuple[int, ...]] = []
    for i in range(ctx.n):
        cols = []
        for j in range(int(box[i])):
            cols.append(len(names))
            names.append(f"{ctx.names[i]}_{j+1}")
            var_map.append(i)
        blocks.append(tuple(cols))
    target = VarContext(names)

    rows = np.zeros((ideal.matrix.shape[0], target.n), dtype=np.int64)
    for r in range(ideal.matrix.shape[0]):
        for i in range(ctx.n):
            for t in blocks[i][: ideal.matrix[r, i]]:
                rows[r, t] = 1
    image = MonomialIdeal._trusted(target, minimalize_rows(rows))
    if image.num_gens != ideal.num_gens:
        raise RuntimeError("polarization must preserve the generator count")
    return Polarization(
        source=ctx,
        target=target,
        ideal=image,
        var_map=tuple(var_map),
        blocks=tuple(blocks),
    )


def specialize(
    pol: Polarization, obj: Union[Monomial, MonomialIdeal, MonomialPrime]
) -> Union[Monomial, MonomialIdeal, MonomialPrime]:
    """Apply the specialization map to a target-context object."""
    if isinstance(obj, Monomial):
        return pol.specialize_monomial(obj)
    if isinstance(obj, MonomialPrime):
        return pol.specialize_prime(obj)
    if isinstance(obj, MonomialIdeal):
        return pol.specialize_ideal(obj)
    raise TypeError(f"cannot specialize {type(obj).__name__}")


def verify_polarization_theorem(ideal: MonomialIdeal) -> dict:
    """Recompute both sides of the polarization correspondence.

    Parts, each reported as a boolean:
      a: Ass(I) equals the specialization image of Ass(I^p);
      b: v_{pi(q)}(I) <= v_q(I^p) for every q in Ass(I^p);
      c: v_p(I) equals the fiber minimum min{v_q(I^p) : pi(q) = p};
      d: v(I) = v(I^p).

    The report carries the per-prime tables so a failure is fully
    reproducible; ``ok`` is the conjunction.
    """
    if not ideal.is_proper:
        raise ValueError("the polarization theorem concerns proper nonzero ideals")
    pol = polarize(ideal)
    ass_src = associated_primes(ideal)
    ass_tgt = associated_primes(pol.ideal)

    v_src = {p: v_at_prime(ideal, p)[0] for p in ass_src}
    v_tgt = {q: v_at_prime(pol.ideal, q)[0] for q in ass_tgt}

    fibers: dict[MonomialPrime, list[MonomialPrime]] = {p: [] for p in ass_src}
    image_ok = True
    for q in ass_tgt:
        p = pol.specialize_prime(q)
        if p in fibers:
            fibers[p].append(q)
        else:
            image_ok = False

    part_a = image_ok and all(fibers[p] for p in ass_src)
    part_b = all(
        v_src[pol.specialize_prime(q)] <= v_tgt[q]
        for q in ass_tgt
        if pol.specialize_prime(q) in v_src
    )
    part_c = part_a and all(
        v_src[p] == min(v_tgt[q] for q in fibers[p]) for p in ass_src
    )
    v_i = v_number(ideal)[0]
    v_p = v_number(pol.ideal)[0]
    part_d = v_i == v_p

    return {
        "a": part_a,
        "b": part_b,
        "c": part_c,
        "d": part_d,
        "ok": part_a and part_b and part_c and part_d,
        "v_source": v_i,
        "v_target": v_p,
        "v_per_prime_source": {p: v for p, v in v_src.items()},
        "v_per_prime_target": {q: v for q, v in v_tgt.items()},
        "fibers": fibers,
    }
