"""v-numbers of squarefree monomial ideals.

Four routes are provided: the definitional colon search, the formula through
facets of the Alexander dual (the production path), the cover-ideal formula
for graphs, and the independent-set / neighbor-set characterization on the
clutter of generators. They are cross-checked against each other in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .bits import bits_of, full_mask, subsets_of_size
from .complex import SimplicialComplex, alexander_dual, free_vertex_map
from .ideals import (
    MonomialPrime,
    SquarefreeIdeal,
    associated_primes,
    complex_of_ideal,
    equals_prime,
    ideal_invariants,
    stanley_reisner_ideal,
)

INF = math.inf


@dataclass(frozen=True)
class VWitness:
    """A prime P, a squarefree monomial x_C with (I : x_C) = P, and |C|."""

    prime: MonomialPrime
    monomial: int
    value: int

    def verify(self, ideal: SquarefreeIdeal) -> bool:
        return self.monomial.bit_count() == self.value and equals_prime(ideal, self.monomial, self.prime)


def _check_associated(ideal: SquarefreeIdeal, prime: MonomialPrime) -> None:
    if prime not in associated_primes(ideal):
        raise ValueError(f"prime with support {bits_of(prime.support)} is not associated")


def v_p_definitional(ideal: SquarefreeIdeal, prime: MonomialPrime) -> VWitness:
    """Smallest |C| with (I : x_C) = P, by cardinality-ascending search.

    Among minimizers the smallest mask is returned.
    """
    _check_associated(ideal, prime)
    full = full_mask(ideal.n)
    for k in range(ideal.n + 1):
        hits = [c for c in subsets_of_size(full, k) if equals_prime(ideal, c, prime)]
        if hits:
            return VWitness(prime, min(hits), k)
    raise AssertionError("an associated prime is always reached by some colon")


def colon_is_prime(generators: tuple[int, ...], c: int) -> bool:
    """Is (I : x_C) a monomial prime? Each g - C must contain some singleton g' - C."""
    if any(g & c == g for g in generators):
        return False
    singles = 0
    for g in generators:
        rest = g & ~c
        if rest.bit_count() == 1:
            singles |= rest
    return all(g & ~c & singles for g in generators)


def v_definitional(ideal: SquarefreeIdeal) -> int:
    """v(I) straight from the definition: least |C| whose colon is prime."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("needs a proper nonzero ideal")
    full = full_mask(ideal.n)
    for k in range(ideal.n + 1):
        for c in subsets_of_size(full, k):
            if colon_is_prime(ideal.generators, c):
                return k
    raise AssertionError("some colon of a squarefree ideal is always prime")


def _best_intersection(pools: list[list[int]], full: int) -> tuple[int, list[int]]:
    """Maximize |F_1 & ... & F_h| choosing F_j from pools[j]; branch and bound."""
    order = sorted(range(len(pools)), key=lambda j: len(pools[j]))
    best = [-1, None]
    chosen = [0] * len(pools)

    def go(pos: int, acc: int) -> None:
        if acc.bit_count() <= best[0]:
            return
        if pos == len(order):
            best[0] = acc.bit_count()
            best[1] = list(chosen)
            return
        j = order[pos]
        cands = sorted(pools[j], key=lambda f: -(acc & f).bit_count())
        for f in cands:
            chosen[j] = f
            go(pos + 1, acc & f)

    go(0, full)
    return best[0], best[1]


def v_p_dual_formula(delta: SimplicialComplex, prime: MonomialPrime, dual: SimplicialComplex | None = None) -> VWitness:
    """v_P(I_Delta) = n - h - max |F_1 & ... & F_h|.

    P = (x_1..x_h) must be associated; each F_j ranges over the facets of the
    Alexander dual containing P minus x_j. The witness monomial is the
    complement of (F_1 & ... & F_h) | P.
    """
    supp = prime.support
    if (delta.vertex_mask & ~supp) not in delta.facets:
        raise ValueError(f"prime with support {bits_of(supp)} is not associated")
    if dual is None:
        dual = alexander_dual(delta)
    pools = []
    for x in bits_of(supp):
        need = supp & ~(1 << x)
        pools.append([f for f in dual.facets if f & need == need])
    size, picks = _best_intersection(pools, delta.vertex_mask)
    common = delta.vertex_mask
    for f in picks:
        common &= f
    c = delta.vertex_mask & ~(common | supp)
    value = delta.n - prime.height - size
    return VWitness(prime, c, value)


@dataclass
class VReport:
    v: int
    per_height: dict[int, int | float]
    per_prime: list[VWitness] = field(default_factory=list)
    witness: VWitness | None = None

    def to_dict(self, labels) -> dict:
        def names(mask):
            return [labels[i] for i in bits_of(mask)]

        return {
            "v": self.v,
            "per_prime": [
                {"prime": names(w.prime.support), "value": w.value, "witness": names(w.monomial)}
                for w in self.per_prime
            ],
            "per_height": {str(h): ("inf" if val == INF else val) for h, val in sorted(self.per_height.items())},
        }


def v_number(ideal: SquarefreeIdeal | SimplicialComplex) -> VReport:
    """v(I) and v_h(I) for every height h in 1..n, with per-prime witnesses.

    Heights with no associated prime get ``inf``; ties between minimizing
    primes are broken by the smallest prime support.
    """
    if isinstance(ideal, SimplicialComplex):
        delta = ideal
        ideal = stanley_reisner_ideal(delta)
    else:
        delta = complex_of_ideal(ideal)
    dual = alexander_dual(delta)
    witnesses = [v_p_dual_formula(delta, p, dual) for p in associated_primes(ideal)]
    per_height: dict[int, int | float] = {h: INF for h in range(1, ideal.n + 1)}
    for w in witnesses:
        h = w.prime.height
        per_height[h] = min(per_height[h], w.value)
    best = min(witnesses, key=lambda w: (w.value, w.prime.support))
    return VReport(best.value, per_height, witnesses, best)


def v_cover_formula(graph) -> int:
    """v(J(G)) = |V| - max |F & F'| over distinct maximal independent sets - 2."""
    from .graphs import independence_complex

    if not graph.edges:
        raise ValueError("cover-ideal formula needs at least one edge")
    facets = independence_complex(graph).facets
    overlap = max((a & b).bit_count() for a, b in combinations(facets, 2))
    return graph.n - overlap - 2


def neighbor_set(generators: tuple[int, ...], independent: int) -> int:
    """Vertices v such that some edge of the clutter lies inside A + v."""
    out = 0
    for e in generators:
        rest = e & ~independent
        if rest.bit_count() == 1:
            out |= rest
    return out


def _is_minimal_cover(generators: tuple[int, ...], cover: int) -> bool:
    if not all(e & cover for e in generators):
        return False
    for v in bits_of(cover):
        smaller = cover & ~(1 << v)
        if all(e & smaller for e in generators):
            return False
    return True


def min_admissible_set(ideal: SquarefreeIdeal) -> int:
    """Smallest independent A (least |A|, then least mask) whose neighbor set
    is a minimal vertex cover of the clutter of generators."""
    gens = ideal.generators
    if not gens or ideal.is_unit:
        raise ValueError("needs a proper nonzero ideal")
    full = full_mask(ideal.n)
    for k in range(ideal.n + 1):
        for a in sorted(subsets_of_size(full, k)):
            if ideal.contains(a):
                continue
            if _is_minimal_cover(gens, neighbor_set(gens, a)):
                return a
    raise AssertionError("every facet of the complex is admissible")


def v_via_clutter(ideal: SquarefreeIdeal) -> int:
    return min_admissible_set(ideal).bit_count()


def _unique_container(facets: tuple[int, ...], face: int, target: int) -> bool:
    return all(g == target or face & g != face for g in facets)


def v_p_bound_witness(delta: SimplicialComplex, facet: int, m: int) -> tuple[bool, int | None]:
    """Is v_{P_F} <= m? Witness W: an m-subset of F contained in no other facet.

    ``m`` must satisfy 1 <= m <= n - bight(I_Delta).
    """
    if facet not in delta.facets:
        raise ValueError("not a facet")
    bight = ideal_invariants(stanley_reisner_ideal(delta)).big_height
    if not 1 <= m <= delta.n - bight:
        raise ValueError(f"m = {m} outside 1..{delta.n - bight}")
    for w in subsets_of_size(facet, m):
        if _unique_container(delta.facets, w, facet):
            return True, w
    return False, None


def v_p_facet_exact(delta: SimplicialComplex, facet: int) -> int:
    """Exact v_{P_F}: the least |W| with W inside F and in no other facet."""
    if facet not in delta.facets:
        raise ValueError("not a facet")
    for m in range(facet.bit_count() + 1):
        for w in subsets_of_size(facet, m):
            if _unique_container(delta.facets, w, facet):
                return m
    raise AssertionError("F itself lies in no other facet")


def has_free_vertex(delta: SimplicialComplex, facet: int) -> bool:
    return free_vertex_map(delta)[facet] != 0


def prime_of_facet(delta: SimplicialComplex, facet: int) -> MonomialPrime:
    return MonomialPrime(delta.vertex_mask & ~facet)


def facet_of_prime(delta: SimplicialComplex, prime: MonomialPrime) -> int:
    return delta.vertex_mask & ~prime.support

