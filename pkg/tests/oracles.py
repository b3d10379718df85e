"""Brute-force reference computations, written without the package's shortcuts.

Each works straight from a definition on explicit subsets or exponent
vectors, so agreement with the fast routes is meaningful.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb


def all_subsets(n: int):
    return range(1 << n)


def faces_of(facets) -> set[int]:
    out = set()
    for f in facets:
        sub = f
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return out


def maximal(masks) -> set[int]:
    masks = set(masks)
    return {m for m in masks if not any(m != o and m & o == m for o in masks)}


def minimal(masks) -> set[int]:
    masks = set(masks)
    return {m for m in masks if not any(m != o and m & o == o for o in masks)}


def dual_facets(n: int, facets) -> set[int]:
    """Facets of {F : V - F not a face}, by scanning every subset."""
    faces = faces_of(facets)
    full = (1 << n) - 1
    return maximal(f for f in all_subsets(n) if (full & ~f) not in faces)


def nonfaces_minimal(n: int, facets) -> set[int]:
    faces = faces_of(facets)
    return minimal(f for f in all_subsets(n) if f not in faces)


def betti_alternating_sums(n: int, facets) -> dict[int, int]:
    """sum_i (-1)^i beta_{i,j} from the Hilbert series: coefficients of
    sum_F t^|F| (1-t)^(n-|F|) over the faces F."""
    out: dict[int, int] = {}
    for f in faces_of(facets):
        k = f.bit_count()
        for e in range(n - k + 1):
            out[k + e] = out.get(k + e, 0) + (-1) ** e * comb(n - k, e)
    return {j: c for j, c in out.items() if c}


def in_symbolic_power(a, primes, ell) -> bool:
    return all(sum(a[i] for i in range(len(a)) if (p >> i) & 1) >= ell for p in primes)


def symbolic_power_generators(n: int, primes, ell: int) -> set[tuple[int, ...]]:
    """Minimal vectors in {0..ell}^n satisfying every prime inequality."""
    hits = [a for a in product(range(ell + 1), repeat=n) if in_symbolic_power(a, primes, ell)]
    return {a for a in hits if not any(b != a and all(x <= y for x, y in zip(b, a)) for b in hits)}


def monomial_colon(gens: list[tuple[int, ...]], a: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Minimal generators of (I : x^a) for a monomial ideal given by exponent vectors."""
    quo = {tuple(max(g - x, 0) for g, x in zip(gen, a)) for gen in gens}
    return {q for q in quo if not any(r != q and all(x <= y for x, y in zip(r, q)) for r in quo)}


def v_p_any_exponents(n: int, gen_masks, prime: int, top: int = 2) -> int | None:
    """min deg f over monomials f with exponents <= top and (I : f) = P."""
    gens = [tuple((g >> i) & 1 for i in range(n)) for g in gen_masks]
    want = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n) if (prime >> i) & 1}
    best = None
    for a in product(range(top + 1), repeat=n):
        d = sum(a)
        if best is not None and d >= best:
            continue
        if monomial_colon(gens, a) == want:
            best = d
    return best


def v_p_by_facets(n: int, dual_facet_list, prime: int) -> int:
    """Dual-facet formula evaluated over every tuple, no pruning."""
    xs = [i for i in range(n) if (prime >> i) & 1]
    h = len(xs)
    pools = []
    for j, x in enumerate(xs):
        need = prime & ~(1 << x)
        pools.append([f for f in dual_facet_list if f & need == need])
    best = -1
    for combo in product(*pools):
        inter = (1 << n) - 1
        for f in combo:
            inter &= f
        best = max(best, inter.bit_count())
    return n - h - best


def independent_sets(n: int, edges) -> list[int]:
    return [s for s in all_subsets(n) if not any(e & s == e for e in edges)]


def min_maximal_independent(n: int, edges) -> int:
    ind = set(independent_sets(n, edges))
    full = (1 << n) - 1
    maxi = [s for s in ind if all((s | (1 << v)) not in ind for v in range(n) if not (s >> v) & 1)]
    return min(s.bit_count() for s in maxi) if maxi else 0


def brute_c_nerve(edges) -> int | None:
    """Definition-level search for c(Nerve(G)) with edges given as masks."""
    m = len(edges)
    faces = [s for s in range(1, 1 << m) if _common(edges, s)]
    facets = [f for f in faces if not any(f != g and f & g == f for g in faces)]
    for r in range(1, len(facets) + 1):
        for fam in combinations(facets, r):
            if any(a & b for a, b in combinations(fam, 2)):
                continue
            ok = True
            for k in range(m):
                if any((f >> k) & 1 for f in fam):
                    continue
                if not any((f >> j) & 1 and edges[k] & edges[j] for f in fam for j in range(m)):
                    ok = False
                    break
            if ok:
                return r
    return None


def _common(edges, s: int) -> bool:
    acc = -1
    for k in range(len(edges)):
        if (s >> k) & 1:
            acc &= edges[k]
    return acc != 0
