"""Randomized and exhaustive checks of the results this package implements.

Each suite draws from its own seeded stream, so results do not depend on
which other suites run or in what order. Implementations under test are
injectable through :class:`Impl`; the self-check swaps in deliberately
wrong ones and expects failures.
"""

from __future__ import annotations

import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .bits import bits_of, full_mask, subsets_of_size
from .complex import (
    SimplicialComplex,
    alexander_dual,
    default_labels,
    free_vertex_map,
    from_faces,
    is_2_pure,
    is_pure,
    link,
    minimal_nonfaces,
    normalize,
    simplex,
    skeleton,
)
from .families import bight_example, nerve_counterexample, range_complex, rp2, triangle_plus_point, vwc_expansion
from .graphs import (
    Graph,
    c_line,
    c_nerve,
    cover_ideal,
    cover_stats,
    edge_ideal,
    independence_complex,
    multi_whisker,
    whisker,
)
from .homology import (
    BettiTable,
    classify,
    hdim,
    hochster_betti,
    is_sequentially_cm,
    lad_table,
    matroid_flag,
    reduced_homology_dims,
)
from .ideals import (
    MonomialPrime,
    SquarefreeIdeal,
    associated_primes,
    colon,
    dual_ideal,
    equals_prime,
    ideal_invariants,
    is_unmixed,
    stanley_reisner_ideal,
    symbolic_power,
)
from .localcoh import depth_symbolic, serre_depth
from .sampling import Sampler, stream_seed
from .vnumber import (
    INF,
    has_free_vertex,
    prime_of_facet,
    v_definitional,
    v_number,
    v_p_bound_witness,
    v_p_definitional,
    v_p_dual_formula,
    v_p_facet_exact,
    v_via_clutter,
)

MAX_FAILURES_KEPT = 10


def _v(ideal: SquarefreeIdeal) -> int:
    return v_number(ideal).v


def _v_p(delta: SimplicialComplex, prime: MonomialPrime) -> int:
    return v_p_dual_formula(delta, prime).value


def _v_p_oracle(ideal: SquarefreeIdeal, prime: MonomialPrime) -> int:
    return v_p_definitional(ideal, prime).value


@dataclass
class Impl:
    """The computations a suite trusts; swap one out to test the suite itself."""

    v: Callable[[SquarefreeIdeal], int] = _v
    v_p: Callable[[SimplicialComplex, MonomialPrime], int] = _v_p
    v_p_oracle: Callable[[SquarefreeIdeal, MonomialPrime], int] = _v_p_oracle
    v_oracle: Callable[[SquarefreeIdeal], int] = v_definitional
    betti: Callable[..., BettiTable] = hochster_betti
    depth_symbolic: Callable[[SquarefreeIdeal, int, int], int] = depth_symbolic
    serre_depth: Callable[[SquarefreeIdeal, int, int, int], int] = serre_depth
    c_nerve: Callable[[Graph], int | None] = c_nerve


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    skipped: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0 and self.checked > 0

    def check(self, cond: bool, detail: Callable[[], str] | str) -> bool:
        self.checked += 1
        if not cond:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append(detail() if callable(detail) else detail)
        return cond

    def skip(self, reason: str) -> None:
        self.skipped[reason] += 1

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        skips = f", skipped {sum(self.skipped.values())}" if self.skipped else ""
        return f"{status} {self.name}: {self.checked} checks, {self.failure_count} failures{skips} ({self.seconds:.1f}s)"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failure_count,
            "examples": self.failures,
            "skipped": dict(sorted(self.skipped.items())),
            "notes": self.notes,
        }


def _facets(delta: SimplicialComplex) -> str:
    return "[" + ", ".join("".join(delta.names(f)) if delta.n < 10 else "|".join(delta.names(f))
                           for f in delta.facets) + "]"


def _min_j(betti: BettiTable, i: int) -> int | None:
    row = betti.row(i)
    return min(row) if row else None


# ---------------------------------------------------------------- fixed examples

def rp2_signature_ok() -> bool:
    """Homology of the shipped facet list must be that of the projective plane."""
    d = rp2()
    h2 = reduced_homology_dims(d, 2)
    h3 = reduced_homology_dims(d, 3)
    return (hdim(h2, 1), hdim(h2, 2)) == (1, 1) and (hdim(h3, 1), hdim(h3, 2)) == (0, 0)


def suite_projective_plane(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("projective-plane")
    if not res.check(rp2_signature_ok(), "facet list fails the homology signature"):
        return res
    d = rp2()
    ideal = stanley_reisner_ideal(d)
    v = impl.v(ideal)
    b2, b3 = impl.betti(ideal, 2), impl.betti(ideal, 3)
    res.check(v == 3, f"v = {v}, expected 3")
    res.check(b3.reg == 2, f"reg at p=3 is {b3.reg}, expected 2")
    res.check(b2.reg == 3, f"reg at p=2 is {b2.reg}, expected 3")
    res.check(b2.depth == 2, f"depth at p=2 is {b2.depth}, expected 2")
    res.check(is_2_pure(d), "not 2-pure")
    res.check(v > b2.depth, "v does not exceed depth at p=2")
    res.check(impl.depth_symbolic(ideal, 1, 2) == 2, "local cohomology depth at p=2 is not 2")
    c2, c3 = classify(d, 2, b2), classify(d, 3, b3)
    res.check(not c2.is_CM and c3.is_CM, "Cohen-Macaulay flags do not depend on the characteristic as expected")
    res.notes = {"v": v, "reg_p2": b2.reg, "reg_p3": b3.reg, "depth_p2": b2.depth}
    return res


def suite_small_depth_example(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("triangle-plus-point")
    d = triangle_plus_point()
    ideal = stanley_reisner_ideal(d)
    rep = v_number(ideal)
    b = impl.betti(ideal, 2)
    dim = int(d.dim) + 1
    res.check(impl.v(ideal) == 1, "v != 1")
    res.check(rep.per_height == {1: 1, 2: INF, 3: 1, 4: INF}, f"per-height {rep.per_height}")
    res.check(dim - b.depth == 2, f"dim - depth = {dim - b.depth}")
    res.check(impl.v(ideal) < dim - b.depth, "v is not below dim - depth")
    res.check(not is_pure(d) and not is_2_pure(d), "purity flags wrong")
    c = classify(d, 2, b)
    res.check(c.is_seq_CM and not c.is_CM, "expected sequentially CM but not CM")
    return res


def suite_big_height_example(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("big-height-example")
    pairs = [(4, 1), (5, 2)] + [(m, ell) for m in range(2, 6) for ell in range(1, m) if (m, ell) not in ((4, 1), (5, 2))]
    for m, ell in pairs:
        d = bight_example(m, ell)
        v_dual = impl.v(stanley_reisner_ideal(alexander_dual(d)))
        bight = ideal_invariants(stanley_reisner_ideal(d)).big_height
        res.check(v_dual == 3 * m - 2 * ell - 2, f"(m,l)=({m},{ell}): v = {v_dual}")
        res.check(bight - 1 == 2 * m - ell - 1, f"(m,l)=({m},{ell}): bight - 1 = {bight - 1}")
        if m > ell + 1:
            res.check(v_dual > bight - 1, f"(m,l)=({m},{ell}): no strict inequality")
    return res


def suite_range_construction(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("range-construction")
    for p in range(1, 6):
        for q in range(1, p + 1):
            for r in range(1, q + 1):
                d = range_complex(p, q, r)
                ideal = stanley_reisner_ideal(d)
                inv = ideal_invariants(ideal)
                got = (impl.betti(ideal, 2).reg + 1, impl.v(ideal), inv.initial_degree)
                res.check(got == (p + 1, q, r + 1), f"(p,q,r)=({p},{q},{r}) gave (reg I, v, indeg) = {got}")
                res.check(is_pure(d) and inv.height == 2, f"(p,q,r)=({p},{q},{r}) not pure of height 2")
    return res


def suite_nerve_counterexample(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("nerve-counterexample")
    g = nerve_counterexample()
    got = (c_line(g), impl.c_nerve(g), impl.v(edge_ideal(g)))
    res.check(got == (2, 3, 3), f"(c_line, c_nerve, v) = {got}")
    return res


# ---------------------------------------------------------------- v-number oracles

def _named_instances() -> list[SimplicialComplex]:
    out = [rp2(), triangle_plus_point(), bight_example(4, 1)]
    out += [range_complex(p, q, r) for p in range(1, 5) for q in range(1, p + 1) for r in range(1, q + 1)]
    out.append(independence_complex(Graph(default_labels(3), (0b011, 0b110))))
    out.append(alexander_dual(independence_complex(Graph(default_labels(3), (0b011, 0b110)))))
    return out


def suite_dual_formula(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("dual-formula-oracle")
    pairs = 0

    def run(d: SimplicialComplex, tag: str) -> int:
        ideal = stanley_reisner_ideal(d)
        k = 0
        for prime in associated_primes(ideal):
            a, b = impl.v_p(d, prime), impl.v_p_oracle(ideal, prime)
            w = v_p_dual_formula(d, prime)
            res.check(a == b and w.verify(ideal),
                      lambda: f"{tag} {_facets(d)} prime {d.names(prime.support)}: formula {a}, oracle {b}")
            k += 1
        return k

    for d in _named_instances():
        run(d, "example")
    while pairs < count:
        pairs += run(s.complex(n_max=min(9, cap_n)), "random")
    res.notes["pairs"] = pairs
    return res


def suite_clutter_oracle(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("clutter-oracle")
    for _ in range(count):
        ideal = s.clutter(n_max=min(9, cap_n)).ideal()
        a, b = impl.v(ideal), v_via_clutter(ideal)
        res.check(a == b, lambda: f"{ideal}: v = {a}, clutter route {b}")
    return res


def suite_colon_dual_law(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("colon-dual-law")
    for _ in range(count):
        d = s.complex(n_max=min(8, cap_n))
        ideal = stanley_reisner_ideal(d)
        dual_gens = stanley_reisner_ideal(alexander_dual(d)).generators
        full = d.vertex_mask
        for prime in associated_primes(ideal):
            for c in s.rng.sample(range(full + 1), min(8, full + 1)):
                left = equals_prime(ideal, c, prime)
                outside = any(not g & c for g in dual_gens)
                inside = all(all(g & (c | (1 << j)) for g in dual_gens) for j in bits_of(prime.support))
                res.check(left == (outside and inside),
                          lambda: f"{_facets(d)} C={d.names(c)} P={d.names(prime.support)}")
    return res


def suite_lcm_lower_bound(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("lcm-lower-bound")
    for _ in range(count):
        d = s.complex(n_max=min(8, cap_n))
        ideal = stanley_reisner_ideal(d)
        rep = v_number(ideal)
        gens = ideal.generators
        for h, vh in rep.per_height.items():
            if vh == INF:
                continue
            if len(gens) < h:
                res.skip("fewer generators than the height")
                continue
            total = 1
            for k in range(h):
                total = total * (len(gens) - k) // (k + 1)
            if total > 20_000:
                res.skip("too many generator tuples")
                continue
            bound = min((sum_or(t).bit_count() for t in combinations(gens, h))) - h
            res.check(vh >= bound, lambda: f"{_facets(d)}: v_{h} = {vh} < {bound}")
    return res


def sum_or(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def suite_indeg_betti(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("indeg-minus-one-betti")
    hits = 0
    for k in range(count):
        d = s.pure_complex(1 + k % 3, n_max=min(9, cap_n))
        ideal = stanley_reisner_ideal(d)
        inv = ideal_invariants(ideal)
        if impl.v(ideal) != inv.initial_degree - 1:
            res.skip("v differs from indeg - 1")
            continue
        hits += 1
        b = impl.betti(ideal, 2)
        for i in range(1, inv.height + 1):
            res.check(b[i, inv.initial_degree + i - 1] != 0,
                      lambda: f"{_facets(d)}: beta_{i},{inv.initial_degree + i - 1} = 0")
    res.notes["applicable"] = hits
    return res


# ---------------------------------------------------------------- heights one and two

def suite_height_one(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("height-one-law")
    tries = 0
    while res.checked < count and tries < 50 * count:
        tries += 1
        d = s.complex(n_max=min(9, cap_n))
        ideal = stanley_reisner_ideal(d)
        if ideal_invariants(ideal).height != 1:
            res.skip("height is not one")
            continue
        b = impl.betti(ideal, 2)
        v = impl.v(ideal)
        res.check(v == _min_j(b, 1) - 1, lambda: f"{_facets(d)}: v = {v}, min deg - 1 = {_min_j(b, 1) - 1}")
    return res


def suite_second_betti(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("second-betti-witness")
    tries = 0
    while res.checked < count and tries < 50 * count:
        tries += 1
        d = s.complex(n_max=min(9, cap_n))
        ideal = stanley_reisner_ideal(d)
        if ideal_invariants(ideal).height != 2:
            res.skip("height is not two")
            continue
        v = impl.v(ideal)
        attained = [p for p in associated_primes(ideal) if p.height == 2 and impl.v_p(d, p) == v]
        if not attained:
            res.skip("no height-two prime attains v")
            continue
        b = impl.betti(ideal, 2)
        res.check(b[2, 2 + v] != 0, lambda: f"{_facets(d)}: beta_2,{2 + v} = 0 with v = {v}")
    return res


def suite_pure_height_two(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("pure-height-two-law")
    level_checked = 0
    for _ in range(count):
        d = s.pure_complex(2, n_max=min(9, cap_n))
        ideal = stanley_reisner_ideal(d)
        b = impl.betti(ideal, 2)
        v = impl.v(ideal)
        jmin = _min_j(b, 2)
        res.check(jmin is not None and v == jmin - 2, lambda: f"{_facets(d)}: v = {v}, betti law {jmin and jmin - 2}")
        res.check(v <= b.reg, lambda: f"{_facets(d)}: v = {v} > reg = {b.reg}")
        lcm = min((a | c).bit_count() for a, c in combinations(ideal.generators, 2))
        res.check(v == lcm - 2, lambda: f"{_facets(d)}: v = {v}, lcm degree - 2 = {lcm - 2}")
        c = classify(d, 2, b)
        if c.is_CM:
            level_checked += 1
            res.check((v == b.reg) == c.is_level, lambda: f"{_facets(d)}: CM, v==reg is {v == b.reg}, level {c.is_level}")
    res.notes["cohen_macaulay_instances"] = level_checked
    return res


def suite_sequentially_cm_dual(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    """v(I) = n - d_2 - 1 when the dual is sequentially CM and I is pure of height two.

    Purity (equivalently, a flag dual) is required: with mixed heights the
    two facets realizing d_2 - 1 may meet in a pair that is a face of the
    dual, and the formula undershoots. ``mixed_counterexamples`` counts
    such instances met along the way.
    """
    res = SuiteResult("sequentially-cm-dual")
    tries = 0
    mixed_bad = 0
    while res.checked < count and tries < 200 * count:
        tries += 1
        pure = tries % 2 == 0
        d = s.pure_complex(2, n_max=min(9, cap_n)) if pure else s.complex(n_max=min(9, cap_n))
        if ideal_invariants(stanley_reisner_ideal(d)).height != 2:
            res.skip("height is not two")
            continue
        dual = alexander_dual(d)
        if len(dual.facets) < 2 or not is_sequentially_cm(dual, 2):
            res.skip("dual not sequentially CM with two facets")
            continue
        sizes = sorted((f.bit_count() for f in dual.facets), reverse=True)
        v = impl.v(stanley_reisner_ideal(d))
        want = d.n - sizes[1] - 1
        if is_pure(d):
            res.check(v == want, lambda: f"{_facets(d)}: v = {v}, expected {want}")
        elif v != want:
            mixed_bad += 1
    res.notes["mixed_counterexamples"] = mixed_bad
    return res


# ---------------------------------------------------------------- graph families

def _total_vertices_ok(h: int, counts: list[int], factor: int, cap: int) -> bool:
    return h + sum(counts) <= cap if factor == 1 else factor * sum(counts) <= cap


def suite_multi_whisker_cover(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("multi-whisker-cover")
    cap = min(13, cap_n)
    while res.checked < 2 * count:
        g0 = s.base_graph(n_max=4)
        counts = s.counts(g0.n)
        if g0.n + sum(counts) > cap:
            res.skip("too many vertices")
            continue
        g = multi_whisker(g0, counts)
        j = cover_ideal(g)
        want = g0.n + min(counts) - 2
        got, oracle = impl.v(j), impl.v_oracle(j)
        res.check(got == want, lambda: f"G0 edges {[g0.edge_names(e) for e in g0.edges]} counts {counts}: v(J) = {got}, want {want}")
        res.check(oracle == want, lambda: f"G0 edges {[g0.edge_names(e) for e in g0.edges]} counts {counts}: oracle {oracle}")
    res.notes["instances"] = res.checked // 2
    return res


def _vwc_instance(s: Sampler, cap: int) -> tuple[Graph, Graph, list[int]] | None:
    base = s.base_graph(n_max=3)
    counts = s.counts(base.n, hi=3)
    if 2 * sum(counts) > cap:
        return None
    return base, vwc_expansion(base, counts), counts


def suite_vwc_cover(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("very-well-covered-cover")
    cap = min(12, cap_n)
    made = 0
    while made < count:
        inst = _vwc_instance(s, cap)
        if inst is None:
            res.skip("too many vertices")
            continue
        base, g, counts = inst
        made += 1
        stats = cover_stats(g)
        h = ideal_invariants(edge_ideal(g)).height
        res.check(stats.is_very_well_covered and h == sum(counts),
                  lambda: f"expansion of {base.edges} by {counts} is not very well-covered of height {sum(counts)}")
        j = cover_ideal(g)
        want = h + min(counts) - 2
        got, oracle = impl.v(j), impl.v_oracle(j)
        res.check(got == want and oracle == want,
                  lambda: f"expansion of {base.edges} by {counts}: v(J) = {got}, oracle {oracle}, want {want}")
    res.notes["instances"] = made
    return res


def suite_nerve(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("nerve-domination")
    g = nerve_counterexample()
    res.check(impl.c_nerve(g) == 3 and c_line(g) == 2, "published counterexample not reproduced")
    for _ in range(count):
        g = s.graph(n_max=min(9, cap_n), max_edges=12)
        cn, v = impl.c_nerve(g), impl.v(edge_ideal(g))
        if cn is None:
            res.check(False, lambda: f"no admissible family for edges {[g.edge_names(e) for e in g.edges]}")
            continue
        res.check(cn == v, lambda: f"edges {[g.edge_names(e) for e in g.edges]}: c_nerve {cn}, v {v}")
    return res


def suite_vwc_edge(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("very-well-covered-edge")
    cap = min(12, cap_n)
    while res.checked < count:
        inst = _vwc_instance(s, cap)
        if inst is None:
            res.skip("too many vertices")
            continue
        base, g, counts = inst
        ideal = edge_ideal(g)
        v, b = impl.v(ideal), impl.betti(ideal, 2)
        res.check(v <= b.reg, lambda: f"expansion of {base.edges} by {counts}: v = {v} > reg = {b.reg}")
    return res


def suite_multi_whisker_edge(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("multi-whisker-edge")
    cap = min(12, cap_n)
    made = 0
    while made < count:
        g0 = s.base_graph(n_max=4)
        counts = s.counts(g0.n)
        if g0.n + sum(counts) > cap:
            res.skip("too many vertices")
            continue
        made += 1
        g = multi_whisker(g0, counts)
        ideal = edge_ideal(g)
        i0 = min(f.bit_count() for f in independence_complex(g0).facets)
        ig = min(f.bit_count() for f in independence_complex(g).facets)
        v, b = impl.v(ideal), impl.betti(ideal, 2)
        tag = f"G0 edges {[g0.edge_names(e) for e in g0.edges]} counts {counts}"
        res.check(v == i0, lambda: f"{tag}: v = {v}, i(G0) = {i0}")
        res.check(i0 <= ig == b.depth, lambda: f"{tag}: i(G0) = {i0}, i(G) = {ig}, depth = {b.depth}")
        res.check(v <= b.reg, lambda: f"{tag}: v = {v} > reg = {b.reg}")
    res.notes["instances"] = made
    return res


# ---------------------------------------------------------------- bounds on v_P

def suite_facet_bounds(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("facet-bounds")
    for _ in range(count):
        d = s.complex(n_max=min(9, cap_n))
        ideal = stanley_reisner_ideal(d)
        inv = ideal_invariants(ideal)
        frees = free_vertex_map(d)
        for f in d.facets:
            prime = prime_of_facet(d, f)
            v = impl.v_p(d, prime)
            res.check(v <= inv.arith_degree - 1, lambda: f"{_facets(d)}: v_P = {v} > arith-deg - 1")
            res.check(v_p_facet_exact(d, f) == v, lambda: f"{_facets(d)} facet {d.names(f)}: exact {v_p_facet_exact(d, f)} vs {v}")
            for m in range(1, d.n - inv.big_height + 1):
                ok, _ = v_p_bound_witness(d, f, m)
                res.check(ok == (v <= m), lambda: f"{_facets(d)} facet {d.names(f)} m={m}: witness {ok}, v_P = {v}")
            res.check((v == 1) == (frees[f] != 0) == has_free_vertex(d, f),
                      lambda: f"{_facets(d)} facet {d.names(f)}: v_P = {v}, free vertices {d.names(frees[f])}")
    return res


def _symbolic_instance(res: SuiteResult, d: SimplicialComplex, impl: Impl, p: int) -> None:
    n = d.n
    ideal = stanley_reisner_ideal(d)
    dual_ideal_ = dual_ideal(ideal)
    h = ideal_invariants(ideal).height
    vps = [impl.v_p(d, prime) for prime in associated_primes(ideal)]
    tag = _facets(d)
    for I in (ideal, dual_ideal_):
        lc, hb = impl.depth_symbolic(I, 1, p), impl.betti(I, p).depth
        res.check(lc == hb, lambda: f"{tag}: depth via local cohomology {lc}, via Betti numbers {hb}")
    depth2 = impl.depth_symbolic(dual_ideal_, 2, p)
    if h == 2:
        res.check(all(v <= n - depth2 - 1 for v in vps), lambda: f"{tag}: max v_P {max(vps)} > n - depth - 1 = {n - depth2 - 1}")
        res.check((max(vps) <= n - 3) == (depth2 >= 2), lambda: f"{tag}: max v_P {max(vps)}, depth {depth2}")
    if not is_unmixed(dual_ideal_):
        res.skip("dual ideal mixed: Serre-depth undefined")
        return
    sd = impl.serre_depth(dual_ideal_, 2, h, p)
    dim = n - ideal_invariants(dual_ideal_).height
    res.check(depth2 <= sd <= dim, lambda: f"{tag}: S_{h}-depth {sd} outside [depth {depth2}, dim {dim}]")
    res.check(all(v <= n - sd - 1 for v in vps), lambda: f"{tag}: max v_P {max(vps)} > n - S_{h}-depth - 1 = {n - sd - 1}")
    if h == 2:
        if sd == dim:
            indeg = ideal_invariants(ideal).initial_degree
            res.notes["s2_instances"] = res.notes.get("s2_instances", 0) + 1
            res.check(all(v == indeg - 1 for v in vps), lambda: f"{tag}: (S2) holds but v_P {vps} != indeg - 1 = {indeg - 1}")


def suite_symbolic(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("symbolic-power-bounds")
    n_max = min(10, cap_n)
    for k in range(count):
        _symbolic_instance(res, s.pure_complex(2 + k % 2, n_max=n_max), impl, 2)
    for k in range(count):
        _symbolic_instance(res, s.pure_complex(2 + k % 2, n_max=n_max, unmixed_dual=True), impl, 2)
    res.notes["complexes"] = 2 * count
    return res


def lemma_conditions(delta: SimplicialComplex, xs: int) -> bool:
    """Boundary of X in the complex, X not; no common cone point; every facet
    contains some codimension-one face of X."""
    if xs in delta:
        return False
    ridges = [xs & ~(1 << x) for x in bits_of(xs)]
    if not all(r in delta for r in ridges):
        return False
    for z in bits_of(delta.vertex_mask & ~xs):
        if all((r | (1 << z)) in delta for r in ridges):
            return False
    return all(any(r & f == r for r in ridges) for f in delta.facets)


def suite_nonvanishing(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("nonvanishing-lemma")
    for _ in range(count):
        d = s.complex(n_max=min(8, cap_n))
        dims = reduced_homology_dims(d, 2)
        for m in range(2, min(d.n, 5) + 1):
            for xs in subsets_of_size(d.vertex_mask, m):
                if lemma_conditions(d, xs):
                    res.check(hdim(dims, m - 2) >= 1, lambda: f"{_facets(d)} X={d.names(xs)}: H_{m - 2} = 0")
    # a hollow simplex inside a cone-free complex always qualifies
    for n in range(3, 7):
        d = skeleton(simplex(default_labels(n)), n - 2)
        res.check(lemma_conditions(d, d.vertex_mask) and hdim(reduced_homology_dims(d, 2), n - 2) == 1,
                  f"hollow {n}-simplex")
    return res


# ---------------------------------------------------------------- 2-pure and friends

def _special_complexes() -> list[SimplicialComplex]:
    out = [rp2()]
    for n in range(3, 8):
        full = simplex(default_labels(n))
        for k in range(0, n - 1):
            out.append(skeleton(full, k))
    for n in range(4, 9):
        labels = default_labels(n)
        out.append(from_faces([[labels[i], labels[(i + 1) % n]] for i in range(n)], labels))
    cross = from_faces([[a, b, c] for a in "14" for b in "25" for c in "36"], default_labels(6))
    out.append(cross)
    return out


def suite_two_pure(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("two-pure-characterization")
    flagged = Counter()
    pool = _special_complexes() + [s.complex(n_max=min(9, cap_n)) for _ in range(count)]
    for d in pool:
        ideal = stanley_reisner_ideal(d)
        v = impl.v(ideal)
        dim = int(d.dim) + 1
        two = is_2_pure(d)
        res.check((v == dim) == two, lambda: f"{_facets(d)}: v = {v}, dim = {dim}, 2-pure {two}")
        if is_pure(d):
            ridges = {f & ~(1 << x) for f in d.facets for x in bits_of(f)}
            crit = all(hdim(reduced_homology_dims(link(d, r), 2), 0) >= 1 for r in ridges)
            res.check(crit == two, lambda: f"{_facets(d)}: link criterion {crit}, 2-pure {two}")
        for p in (2, 3):
            b = impl.betti(ideal, p)
            c = classify(d, p, b)
            mat = matroid_flag(d)
            if c.is_2CM or c.is_gorenstein or mat:
                flagged.update(k for k, on in (("2CM", c.is_2CM), ("gorenstein", c.is_gorenstein),
                                                ("matroid", mat)) if on)
                res.check(v == b.reg, lambda: f"{_facets(d)} p={p}: v = {v}, reg = {b.reg}, flags {c}, matroid {mat}")
    res.notes["flagged"] = dict(sorted(flagged.items()))
    return res


# ---------------------------------------------------------------- homology-level invariants

def suite_local_duality(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("local-alexander-duality")
    for _ in range(count):
        d = s.complex(n_max=min(9, cap_n))
        dual = alexander_dual(d)
        p = s.rng.choice((2, 3))
        for face in sorted(d.faces):
            w = d.vertex_mask & ~face
            for i, left, right in lad_table(d, w, p, dual):
                res.check(left == right, lambda: f"{_facets(d)} W={d.names(w)} i={i}: {left} vs {right}")
    return res


def suite_terai(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("terai-duality")
    for _ in range(count):
        d = s.complex(n_max=min(9, cap_n))
        p = s.rng.choice((2, 3))
        reg_dual = impl.betti(alexander_dual(d), p).reg + 1
        pd = impl.betti(d, p).pd
        res.check(reg_dual == pd, lambda: f"{_facets(d)} p={p}: reg I* = {reg_dual}, pd = {pd}")
    return res


def suite_complex_laws(s: Sampler, count: int, impl: Impl, cap_n: int) -> SuiteResult:
    res = SuiteResult("complex-and-ideal-laws")
    for _ in range(count):
        d = s.complex(n_max=min(10, cap_n))
        dual = alexander_dual(d)
        ideal = stanley_reisner_ideal(d)
        res.check(alexander_dual(dual) == d, lambda: f"{_facets(d)}: dual is not an involution")
        res.check(set(dual.facets) == {d.vertex_mask & ~m for m in minimal_nonfaces(d)}, "dual facets")
        res.check(ideal_invariants(stanley_reisner_ideal(dual)).initial_degree == ideal_invariants(ideal).height,
                  lambda: f"{_facets(d)}: indeg of dual ideal differs from height")
        res.check(colon(ideal, 0) == ideal, "colon by 1")
        p = s.rng.choice((2, 3, 5))
        dims = reduced_homology_dims(d, p)
        chi = sum((-1) ** (len(bits_of(f)) - 1) for f in d.faces)
        res.check(sum((-1) ** i * x for i, x in dims.items()) == chi, lambda: f"{_facets(d)}: Euler characteristic")
        if d.n <= 8:
            res.check(hochster_betti(d, p).entries == hochster_betti(d, p, reverse=True).entries, "scan order")
            for ell in (1, 2):
                sp = symbolic_power(ideal, ell)
                primes = associated_primes(ideal)
                res.check(all(all(sum(g[i] for i in bits_of(q.support)) >= ell for q in primes) for g in sp.generators),
                          lambda: f"{_facets(d)}: symbolic generator violates a prime condition")
                if ell == 1:
                    res.check(sp == ideal.as_monomial_ideal(), "first symbolic power")
    return res


SUITES: dict[str, tuple[Callable[..., SuiteResult], int]] = {
    "projective-plane": (suite_projective_plane, 1),
    "triangle-plus-point": (suite_small_depth_example, 1),
    "big-height-example": (suite_big_height_example, 1),
    "range-construction": (suite_range_construction, 1),
    "nerve-counterexample": (suite_nerve_counterexample, 1),
    "dual-formula-oracle": (suite_dual_formula, 1000),
    "clutter-oracle": (suite_clutter_oracle, 1000),
    "colon-dual-law": (suite_colon_dual_law, 200),
    "lcm-lower-bound": (suite_lcm_lower_bound, 300),
    "indeg-minus-one-betti": (suite_indeg_betti, 300),
    "height-one-law": (suite_height_one, 200),
    "second-betti-witness": (suite_second_betti, 300),
    "pure-height-two-law": (suite_pure_height_two, 1000),
    "sequentially-cm-dual": (suite_sequentially_cm_dual, 200),
    "multi-whisker-cover": (suite_multi_whisker_cover, 200),
    "very-well-covered-cover": (suite_vwc_cover, 200),
    "nerve-domination": (suite_nerve, 500),
    "very-well-covered-edge": (suite_vwc_edge, 200),
    "multi-whisker-edge": (suite_multi_whisker_edge, 200),
    "facet-bounds": (suite_facet_bounds, 300),
    "symbolic-power-bounds": (suite_symbolic, 300),
    "nonvanishing-lemma": (suite_nonvanishing, 300),
    "two-pure-characterization": (suite_two_pure, 1000),
    "local-alexander-duality": (suite_local_duality, 200),
    "terai-duality": (suite_terai, 300),
    "complex-and-ideal-laws": (suite_complex_laws, 300),
}


def run_suite(name: str, seed: int = 0, count: int | None = None, impl: Impl | None = None,
              cap_n: int = 64) -> SuiteResult:
    func, default = SUITES[name]
    sampler = Sampler(stream_seed(seed, name))
    start = time.perf_counter()
    res = func(sampler, default if count is None else count, impl or Impl(), cap_n)
    res.seconds = time.perf_counter() - start
    if sampler.skipped:
        res.skipped.update({f"sampler: {k}": v for k, v in sampler.skipped.items()})
    return res


def _worker(args: tuple[str, int, int | None, int]) -> SuiteResult:
    name, seed, count, cap_n = args
    return run_suite(name, seed, count, cap_n=cap_n)


def run_all(seed: int = 0, names: list[str] | None = None, scale: float = 1.0, cap_n: int = 64,
            threads: int | None = None) -> list[SuiteResult]:
    """Run suites (all by default) and return results ordered by name."""
    names = sorted(names or SUITES)
    jobs = [(n, seed, max(1, round(SUITES[n][1] * scale)), cap_n) for n in names]
    if threads is None:
        threads = int(os.environ.get("VNUM_THREADS", "1") or 1)
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_worker, jobs))
    else:
        results = [_worker(j) for j in jobs]
    return sorted(results, key=lambda r: r.name)
