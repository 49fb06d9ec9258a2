"""Combinatorial sources of monomial ideals and their closed-form laws.

Three families live here.  Edge ideals of finite simple graphs, with
chordality/cochordality detection through maximum cardinality search
and an independent induced-cycle scan.  Polymatroidal ideals, with the
exchange-property checkers and the standard constructors (Veronese
type, transversal, squarefree Veronese, graphic matroid).  Hibi ideals
of finite posets, with the layered poset P(k), the modified
polarization equality, the expected per-prime v tables, and the
intersection presentation of powers.

Graph vertices and poset elements are 0-based internally; variable
labels are 1-based to match the text formats ("x3" is vertex 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import (
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    colon_monomial,
    intersect,
    multiply,
    power,
    stats,
)
from .polar import polarize

GRAPHIC_MATROID_EDGE_CAP = 8
POSET_SIZE_CAP = 16


# ---------------------------------------------------------------------------
# graphs, chordality, edge ideals


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"bad edge ({i}, {j}): need 0 <= i < j < n")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        edges = set()
        for a, b in pairs:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            edge = (min(a, b), max(a, b))
            if edge in edges:
                raise ValueError(f"duplicate edge {edge}")
            edges.add(edge)
        return cls(n=n, edges=frozenset(edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(
            j if i == v else i for i, j in self.edges if v in (i, j)
        )

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Place old vertex order[t] at new position t."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        pos = {old: t for t, old in enumerate(order)}
        return Graph.from_edges(
            self.n, [(pos[i], pos[j]) for i, j in self.edges]
        )

    def connected_component_count(self) -> int:
        masks = self.adjacency_masks()
        unseen = set(range(self.n))
        count = 0
        while unseen:
            count += 1
            stack = [unseen.pop()]
            while stack:
                v = stack.pop()
                for w in list(unseen):
                    if masks[v] >> w & 1:
                        unseen.remove(w)
                        stack.append(w)
        return count


def complement(graph: Graph) -> Graph:
    """The complement graph (an involution)."""
    edges = {
        (i, j)
        for i, j in combinations(range(graph.n), 2)
        if (i, j) not in graph.edges
    }
    return Graph(n=graph.n, edges=frozenset(edges))


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """The squarefree degree-2 ideal (x_i x_j : {i, j} an edge)."""
    ctx = VarContext([f"x{i+1}" for i in range(graph.n)])
    rows = np.zeros((len(graph.edges), graph.n), dtype=np.int64)
    for r, (i, j) in enumerate(sorted(graph.edges)):
        rows[r, i] = 1
        rows[r, j] = 1
    return MonomialIdeal.from_exponents(ctx, rows)


@dataclass(frozen=True)
class PEO:
    """A verified perfect elimination order of a graph.

    Construction checks the defining property: each vertex's neighbors
    among the later vertices induce a clique.
    """

    graph: Graph
    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(self.graph.n)):
            raise ValueError("order must be a permutation of the vertices")
        if not _peo_valid(self.graph, self.order):
            raise ValueError("order is not a perfect elimination order")


def _peo_valid(graph: Graph, order: Sequence[int]) -> bool:
    position = {v: t for t, v in enumerate(order)}
    for t, v in enumerate(order):
        later = [w for w in graph.neighbors(v) if position[w] > t]
        for a, b in combinations(later, 2):
            if not graph.has_edge(a, b):
                return False
    return True


def _mcs_order(graph: Graph) -> list[int]:
    """Maximum cardinality search visit order, smallest index on ties."""
    weights = [0] * graph.n
    visited = [False] * graph.n
    masks = graph.adjacency_masks()
    visit = []
    for _ in range(graph.n):
        v = max(
            (w, -i) for i, (w, done) in enumerate(zip(weights, visited)) if not done
        )[1]
        v = -v
        visited[v] = True
        visit.append(v)
        for w in range(graph.n):
            if not visited[w] and masks[v] >> w & 1:
                weights[w] += 1
    return visit


def find_peo(graph: Graph) -> Optional[PEO]:
    """A perfect elimination order, or None exactly when none exists.

    Runs maximum cardinality search and verifies the reversed visit
    order; for chordal graphs that order always passes, so a failed
    verification certifies non-chordality.
    """
    order = tuple(reversed(_mcs_order(graph)))
    if _peo_valid(graph, order):
        return PEO(graph=graph, order=order)
    return None


def has_long_induced_cycle(graph: Graph) -> bool:
    """Whether some induced subgraph is a cycle of length >= 4.

    Independent chordality oracle: brute-force over vertex subsets,
    checking 2-regularity and connectedness inside the subset.
    """
    masks = graph.adjacency_masks()
    for size in range(4, graph.n + 1):
        for subset in combinations(range(graph.n), size):
            bits = 0
            for v in subset:
                bits |= 1 << v
            if any(bin(masks[v] & bits).count("1") != 2 for v in subset):
                continue
            seen = 1 << subset[0]
            stack = [subset[0]]
            while stack:
                v = stack.pop()
                reach = masks[v] & bits & ~seen
                while reach:
                    w = (reach & -reach).bit_length() - 1
                    seen |= 1 << w
                    stack.append(w)
                    reach &= reach - 1
            if seen == bits:
                return True
    return False


def froberg_linear_resolution(graph: Graph) -> bool:
    """Whether the edge ideal has a linear resolution: complement chordal."""
    if not graph.edges:
        raise ValueError("the gate needs a graph with at least one edge")
    return find_peo(complement(graph)) is not None


def neighborhood_colon_check(graph: Graph) -> bool:
    """Colon identity at the lead vertex of a cochordal labeling.

    Relabels the graph so a perfect elimination order of the complement
    runs 1, 2, ..., n, then checks that coloning the edge ideal by the
    first variable yields exactly the prime on that vertex's
    neighborhood.  Requires a cochordal input with an edge.
    """
    peo = find_peo(complement(graph))
    if peo is None:
        raise ValueError("graph is not cochordal")
    if not graph.edges:
        raise ValueError("the colon identity needs at least one edge")
    relabeled = graph.relabel(peo.order)
    ideal = edge_ideal(relabeled)
    ctx = ideal.context
    quotient = colon_monomial(ideal, ctx.variable(0))
    expected = MonomialPrime(ctx, relabeled.neighbors(0)).as_ideal()
    return quotient == expected


# ---------------------------------------------------------------------------
# polymatroidal ideals


def _exponent_set(ideal: MonomialIdeal) -> set[tuple[int, ...]]:
    return {tuple(int(e) for e in row) for row in ideal.matrix}


def _require_equigenerated(ideal: MonomialIdeal, what: str) -> None:
    if not stats(ideal).equigenerated:
        raise ValueError(f"{what} expects an equigenerated ideal")


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    """Exchange property over all generator pairs.

    For u, v and every i with u_i > v_i there must be j with u_j < v_j
    such that x_j * u / x_i stays a generator.
    """
    _require_equigenerated(ideal, "is_polymatroidal")
    exps = _exponent_set(ideal)
    n = ideal.context.n
    for u in exps:
        for v in exps:
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                swap = None
                for j in range(n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in exps:
                            swap = j
                            break
                if swap is None:
                    return False
    return True


def dual_exchange_holds(ideal: MonomialIdeal) -> bool:
    """Dual exchange: u_i < v_i forces j with u_j > v_j, x_i u / x_j a gen."""
    _require_equigenerated(ideal, "dual_exchange_holds")
    exps = _exponent_set(ideal)
    n = ideal.context.n
    for u in exps:
        for v in exps:
            for i in range(n):
                if u[i] >= v[i]:
                    continue
                swap = None
                for j in range(n):
                    if u[j] > v[j]:
                        w = list(u)
                        w[i] += 1
                        w[j] -= 1
                        if tuple(w) in exps:
                            swap = j
                            break
                if swap is None:
                    return False
    return True


def colon_polymatroidal_check(ideal: MonomialIdeal) -> bool:
    """Variable colons stay polymatroidal with generation degree down 1.

    Runs over the variables dividing some generator; for a variable
    outside the support the colon is the ideal itself and the law says
    nothing.  Requires a polymatroidal input with alpha >= 2.
    """
    if not is_polymatroidal(ideal):
        raise ValueError("input is not polymatroidal")
    alpha = stats(ideal).alpha
    if alpha < 2:
        raise ValueError("alpha(I) = 1 leaves nothing to check; skip these")
    ctx = ideal.context
    support = np.nonzero(ideal.matrix.any(axis=0))[0]
    for i in support:
        quotient = colon_monomial(ideal, ctx.variable(int(i)))
        st = stats(quotient)
        if not (st.equigenerated and st.alpha == alpha - 1):
            return False
        if not is_polymatroidal(quotient):
            return False
    return True


def veronese_type(n: int, d: int, caps: Sequence[int]) -> MonomialIdeal:
    """All degree-d monomials in n variables with componentwise caps."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    caps = tuple(int(c) for c in caps)
    if len(caps) != n or any(c < 0 for c in caps):
        raise ValueError("caps must give one nonnegative bound per variable")
    ctx = VarContext([f"x{i+1}" for i in range(n)])
    rows = []

    def rec(i: int, left: int, prefix: list[int]) -> None:
        if i == n:
            if left == 0:
                rows.append(list(prefix))
            return
        for e in range(min(caps[i], left) + 1):
            prefix.append(e)
            rec(i + 1, left - e, prefix)
            prefix.pop()

    rec(0, d, [])
    if not rows:
        raise ValueError(f"no degree-{d} monomials fit caps {caps}")
    return MonomialIdeal.from_exponents(ctx, np.array(rows, dtype=np.int64))


def veronese_squarefree(n: int, d: int) -> MonomialIdeal:
    """All squarefree degree-d monomials in n variables."""
    if d > n:
        raise ValueError("squarefree degree cannot exceed the variable count")
    return veronese_type(n, d, (1,) * n)


def transversal(
    supports: Sequence[Iterable[int]], n: Optional[int] = None
) -> MonomialIdeal:
    """The product of the variable primes p_{A_1} * ... * p_{A_r}."""
    sets = [sorted(set(int(v) for v in a)) for a in supports]
    if not sets or any(not a for a in sets):
        raise ValueError("need at least one nonempty variable set")
    top = max(v for a in sets for v in a)
    if n is None:
        n = top + 1
    elif n <= top:
        raise ValueError("n is smaller than a referenced variable index")
    ctx = VarContext([f"x{i+1}" for i in range(n)])
    result = None
    for a in sets:
        prime = MonomialPrime(ctx, a).as_ideal()
        result = prime if result is None else multiply(result, prime)
    return result


def graphic_matroid(graph: Graph) -> MonomialIdeal:
    """Basis ideal of the graphic matroid: one variable per edge.

    Generators correspond to maximum-size spanning forests; edges are
    numbered 1..m in sorted order, edge t owning variable x{t}.  Kept
    exhaustive on purpose and therefore capped at 8 edges.
    """
    edges = sorted(graph.edges)
    if not edges:
        raise ValueError("graphic matroid of an edgeless graph is empty")
    if len(edges) > GRAPHIC_MATROID_EDGE_CAP:
        raise ValueError(
            f"edge count {len(edges)} exceeds the enumeration cap "
            f"{GRAPHIC_MATROID_EDGE_CAP}"
        )
    forest_size = graph.n - graph.connected_component_count()
    if forest_size == 0:
        raise ValueError("graph has no acyclic edge subsets of positive size")
    ctx = VarContext([f"x{t+1}" for t in range(len(edges))])
    rows = []
    for picks in combinations(range(len(edges)), forest_size):
        parent = list(range(graph.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        acyclic = True
        for t in picks:
            a, b = find(edges[t][0]), find(edges[t][1])
            if a == b:
                acyclic = False
                break
            parent[a] = b
        if acyclic:
            row = [0] * len(edges)
            for t in picks:
                row[t] = 1
            rows.append(row)
    return MonomialIdeal.from_exponents(ctx, np.array(rows, dtype=np.int64))


# ---------------------------------------------------------------------------
# posets and Hibi ideals


class Poset:
    """A finite poset on elements 0..n-1, built from cover relations.

    The relation matrix is the reflexive-transitive closure of the
    covers; construction rejects cycles.  Labels are presentation only:
    two posets compare equal when their relation matrices agree.
    """

    __slots__ = ("n", "leq", "labels")

    def __init__(self, leq: np.ndarray, labels: Sequence[str]):
        leq = np.array(leq, dtype=bool)
        n = leq.shape[0]
        if n < 1 or leq.shape != (n, n):
            raise ValueError("relation matrix must be square and nonempty")
        if n > POSET_SIZE_CAP:
            raise ValueError(f"poset size {n} exceeds the cap {POSET_SIZE_CAP}")
        if not leq.diagonal().all():
            raise ValueError("relation must be reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("relation has a cycle (antisymmetry fails)")
        closure = leq.copy()
        for k in range(n):
            closure |= np.outer(closure[:, k], closure[k, :])
        if not np.array_equal(closure, leq):
            raise ValueError("relation must be transitively closed")
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("need one distinct label per element")
        leq.setflags(write=False)
        self.n = n
        self.leq = leq
        self.labels = labels

    @classmethod
    def from_covers(
        cls,
        n: int,
        covers: Iterable[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Poset":
        rel = np.eye(n, dtype=bool)
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"cover ({a}, {b}) out of range")
            if a == b:
                raise ValueError(f"cover ({a}, {b}) relates an element to itself")
            rel[a, b] = True
        closure = rel.copy()
        for k in range(n):
            closure |= np.outer(closure[:, k], closure[k, :])
        if labels is None:
            labels = [str(i + 1) for i in range(n)]
        return cls(closure, labels)

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def comparable_pairs(self) -> list[tuple[int, int]]:
        """All ordered pairs (i, j) with p_i <= p_j, diagonal included."""
        return [
            (i, j) for i in range(self.n) for j in range(self.n) if self.leq[i, j]
        ]

    def strictly_between(self, i: int, j: int) -> int:
        if not self.leq[i, j]:
            raise ValueError("elements are not comparable in this direction")
        return int(
            sum(
                1
                for l in range(self.n)
                if l != i and l != j and self.leq[i, l] and self.leq[l, j]
            )
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and bool(np.array_equal(self.leq, other.leq))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self) -> str:
        rels = [
            f"{self.labels[i]}<{self.labels[j]}"
            for i in range(self.n)
            for j in range(self.n)
            if i != j and self.leq[i, j]
        ]
        return "Poset(%s; %s)" % (" ".join(self.labels), " ".join(rels) or "antichain")


def poset_ideals(poset: Poset) -> list[frozenset[int]]:
    """All down-sets, sorted by size then lexicographically."""
    down_masks = [0] * poset.n
    for j in range(poset.n):
        for i in range(poset.n):
            if poset.leq[i, j]:
                down_masks[j] |= 1 << i
    out = []
    for bits in range(1 << poset.n):
        ok = True
        probe = bits
        while probe:
            j = (probe & -probe).bit_length() - 1
            if down_masks[j] & ~bits:
                ok = False
                break
            probe &= probe - 1
        if ok:
            out.append(frozenset(i for i in range(poset.n) if bits >> i & 1))
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def hibi_context(poset: Poset) -> VarContext:
    return VarContext(
        [f"x{lbl}" for lbl in poset.labels] + [f"y{lbl}" for lbl in poset.labels]
    )


def hibi_ideal(poset: Poset) -> MonomialIdeal:
    """The Hibi ideal: one squarefree degree-n generator per down-set.

    A down-set D contributes the product of x_i over D and y_i over the
    complement, inside the context x_1..x_n, y_1..y_n.
    """
    ctx = hibi_context(poset)
    ideals = poset_ideals(poset)
    rows = np.zeros((len(ideals), 2 * poset.n), dtype=np.int64)
    for r, down in enumerate(ideals):
        for i in range(poset.n):
            rows[r, i if i in down else poset.n + i] = 1
    return MonomialIdeal.from_exponents(ctx, rows)


def poset_power(poset: Poset, k: int) -> Poset:
    """The layered poset P(k) on pairs (i, l), i in [n], l in [k].

    (j, s) lies below (i, r) exactly when p_j <= p_i and s <= r.
    Element (i, l) sits at index i*k + l with label "<label_i>_<l+1>".
    """
    if k < 1:
        raise ValueError("poset_power expects k >= 1")
    n, m = poset.n, poset.n * k
    leq = np.zeros((m, m), dtype=bool)
    for j in range(n):
        for s in range(k):
            for i in range(n):
                for r in range(k):
                    leq[j * k + s, i * k + r] = bool(poset.leq[j, i]) and s <= r
    labels = [
        f"{poset.labels[i]}_{l+1}" for i in range(n) for l in range(k)
    ]
    return Poset(leq, labels)


def hibi_power_polarization_check(poset: Poset, k: int) -> bool:
    """Whether the modified polarization of H_P^k equals H_{P(k)}.

    Applies the standard polarization to the k-th power, then the
    relabeling y_{i,l} -> y_{i,k+1-l} (reversing each y block), and
    compares with the Hibi ideal of the layered poset under the
    positional variable correspondence.  Returns the verdict; a False
    is a falsification event for the caller to report.
    """
    if k < 1:
        raise ValueError("hibi_power_polarization_check expects k >= 1")
    ideal = power(hibi_ideal(poset), k)
    pol = polarize(ideal)
    expected = hibi_ideal(poset_power(poset, k))
    if pol.target != expected.context:
        return False
    n = poset.n
    matrix = pol.ideal.matrix.copy()
    for i in range(n):
        block = pol.blocks[n + i]  # the y_i block
        matrix[:, list(block)] = matrix[:, list(reversed(block))]
    modified = MonomialIdeal.from_exponents(pol.target, matrix)
    return modified == expected


def hibi_expected_ass(poset: Poset) -> frozenset[MonomialPrime]:
    """The primes (x_i, y_j) over comparable pairs p_i <= p_j."""
    ctx = hibi_context(poset)
    return frozenset(
        MonomialPrime(ctx, [i, poset.n + j])
        for i, j in poset.comparable_pairs()
    )


def hibi_v_expected(poset: Poset, k: int) -> dict[MonomialPrime, int]:
    """Closed-form per-prime v table for H_P^k.

    Diagonal primes (x_i, y_i) carry n*k - 1; a strict pair (x_i, y_j)
    carries n*k plus the number of elements strictly between p_i and
    p_j.  The table minimum is always n*k - 1.
    """
    if k < 1:
        raise ValueError("hibi_v_expected expects k >= 1")
    ctx = hibi_context(poset)
    n = poset.n
    table = {}
    for i, j in poset.comparable_pairs():
        prime = MonomialPrime(ctx, [i, n + j])
        if i == j:
            table[prime] = n * k - 1
        else:
            table[prime] = n * k + poset.strictly_between(i, j)
    return table


def hibi_symbolic_intersection_check(poset: Poset, k: int) -> bool:
    """Whether H_P^k equals the intersection of (x_i, y_j)^k over pairs."""
    if k < 1:
        raise ValueError("hibi_symbolic_intersection_check expects k >= 1")
    ideal = power(hibi_ideal(poset), k)
    ctx = ideal.context
    result = None
    for i, j in poset.comparable_pairs():
        piece = power(MonomialPrime(ctx, [i, poset.n + j]).as_ideal(), k)
        result = piece if result is None else intersect(result, piece)
    return result == ideal


def poset_classes(n: int) -> list[Poset]:
    """All posets on n elements up to isomorphism, deterministically.

    Brute force: every antisymmetric transitive relation, canonicalized
    by the lexicographically least relation bitmask over S_n.
    """
    if not 1 <= n <= 4:
        raise ValueError("isomorphism-class enumeration is desk-scale: n <= 4")
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    perms = list(permutations(range(n)))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        rel = np.eye(n, dtype=bool)
        for t, (i, j) in enumerate(pairs):
            if bits >> t & 1:
                rel[i, j] = True
        ok = True
        for i in range(n):
            for j in range(n):
                if i != j and rel[i, j]:
                    if rel[j, i]:
                        ok = False
                        break
                    for l in range(n):
                        if rel[j, l] and not rel[i, l]:
                            ok = False
                            break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        canon = min(
            tuple(
                bool(rel[perm[i], perm[j]])
                for i in range(n)
                for j in range(n)
            )
            for perm in perms
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(Poset(rel, [str(i + 1) for i in range(n)]))
    return out


def poset_classes_upto(n_max: int) -> list[Poset]:
    """All poset isomorphism classes with 1..n_max elements."""
    out = []
    for n in range(1, n_max + 1):
        out.extend(poset_classes(n))
    return out


# ---------------------------------------------------------------------------
# a named fixture used across the suites


def projective_plane_ideal() -> MonomialIdeal:
    """Stanley-Reisner ideal of the 6-vertex triangulation of RP^2.

    The classical minimal triangulation of the real projective plane;
    its non-faces give ten squarefree cubic generators in x1..x6.
    """
    ctx = VarContext([f"x{i+1}" for i in range(6)])
    triples = [
        (1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 4), (1, 5, 6),
        (2, 4, 5), (2, 3, 6), (2, 3, 5), (3, 4, 6), (4, 5, 6),
    ]
    gens = [ctx.monomial({f"x{i}": 1 for i in t}) for t in triples]
    return MonomialIdeal(ctx, gens)
