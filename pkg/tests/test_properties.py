"""Randomized laws checked with hypothesis on small complexes."""

from itertools import combinations_with_replacement

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from oracles import dual_facets
from vnum.complex import alexander_dual, build_complex, default_labels, is_pure, link, normalize
from vnum.homology import hochster_betti
from vnum.ideals import associated_primes, complex_of_ideal, dual_ideal, ideal_invariants, stanley_reisner_ideal, symbolic_power
from vnum.io import format_facets, parse_facets
from vnum.localcoh import depth_symbolic
from vnum.vnumber import v_definitional, v_number, v_p_dual_formula

SETTINGS = settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def _finish(n, masks):
    d = normalize(build_complex(default_labels(n), masks))
    assume(d.n >= 3 and len(d.facets) > 1)
    return d


@st.composite
def complexes(draw, n_max=7):
    n = draw(st.integers(3, n_max))
    masks = draw(st.lists(st.integers(1, (1 << n) - 2), min_size=2, max_size=6))
    return _finish(n, masks)


@st.composite
def pure_complexes(draw, n_max=7):
    n = draw(st.integers(3, n_max))
    k = draw(st.integers(1, n - 1))
    perms = draw(st.lists(st.permutations(range(n)), min_size=2, max_size=6))
    return _finish(n, [sum(1 << i for i in perm[:k]) for perm in perms])


@SETTINGS
@given(complexes())
def test_dual_is_an_involution(d):
    dual = alexander_dual(d)
    assert alexander_dual(dual) == d
    assert set(dual.facets) == dual_facets(d.n, d.facets)


@SETTINGS
@given(complexes())
def test_text_round_trip(d):
    assert parse_facets(format_facets(d)) == d
    assert complex_of_ideal(stanley_reisner_ideal(d)) == d


@SETTINGS
@given(complexes())
def test_dual_ideal_matches_dual_complex(d):
    ideal = stanley_reisner_ideal(d)
    assert dual_ideal(ideal) == stanley_reisner_ideal(alexander_dual(d))


@SETTINGS
@given(complexes())
def test_v_formula_agrees_with_definition(d):
    ideal = stanley_reisner_ideal(d)
    rep = v_number(ideal)
    assert rep.v == v_definitional(ideal)
    assert rep.witness.verify(ideal)


@SETTINGS
@given(complexes())
def test_v_p_bounded_by_codim(d):
    ideal = stanley_reisner_ideal(d)
    for p in associated_primes(ideal):
        w = v_p_dual_formula(d, p)
        assert 0 <= w.value <= d.n - p.height
        assert w.monomial & p.support == 0


@SETTINGS
@given(complexes())
def test_auslander_buchsbaum(d):
    for p in (2, 3):
        b = hochster_betti(d, p)
        assert b.depth == d.n - b.pd
        assert b.depth <= int(d.dim) + 1


@SETTINGS
@given(complexes(n_max=6))
def test_depth_routes_agree(d):
    ideal = stanley_reisner_ideal(d)
    assert depth_symbolic(ideal, 1) == hochster_betti(d, 2).depth


@SETTINGS
@given(complexes(n_max=6))
def test_ordinary_power_inside_symbolic(d):
    ideal = stanley_reisner_ideal(d)
    sp = symbolic_power(ideal, 2)
    for a, b in combinations_with_replacement(ideal.generators, 2):
        vec = tuple(((a >> i) & 1) + ((b >> i) & 1) for i in range(d.n))
        assert sp.contains(vec)


@SETTINGS
@given(complexes())
def test_height_is_dual_initial_degree(d):
    inv = ideal_invariants(stanley_reisner_ideal(d))
    dual_inv = ideal_invariants(stanley_reisner_ideal(alexander_dual(d)))
    assert inv.height == dual_inv.initial_degree
    assert inv.big_height == d.n - min(f.bit_count() for f in d.facets)


@SETTINGS
@given(pure_complexes())
def test_links_of_pure_complexes_are_pure(d):
    assert is_pure(d)
    for face in d.faces:
        if face:
            lk = link(d, face)
            assert len({f.bit_count() for f in lk.facets}) == 1


@SETTINGS
@given(complexes())
def test_normalize_is_idempotent(d):
    assert normalize(d) == d
