import pytest

from vnum.complex import is_2_pure, is_pure
from vnum.families import (
    bight_example,
    complete_graph,
    nerve_counterexample,
    range_complex,
    range_seed,
    rp2,
    triangle_plus_point,
    vwc_expansion,
)
from vnum.graphs import Graph, cover_ideal, cover_stats
from vnum.homology import hochster_betti
from vnum.ideals import ideal_invariants, stanley_reisner_ideal
from vnum.vnumber import v_definitional


def test_rp2_shape():
    d = rp2()
    assert d.n == 6 and len(d.facets) == 10 and is_pure(d) and d.dim == 2


@pytest.mark.parametrize("p, q, r", [(1, 1, 1), (3, 2, 1), (4, 4, 2), (5, 3, 3)])
def test_range_invariants(p, q, r):
    d = range_complex(p, q, r)
    ideal = stanley_reisner_ideal(d)
    inv = ideal_invariants(ideal)
    assert inv.height == inv.big_height == 2
    assert v_definitional(ideal) == q
    assert hochster_betti(d, 2).reg == p  # reg I = p + 1
    assert inv.initial_degree == r + 1


def test_range_seed_rejects_bad_triples():
    for bad in [(2, 3, 1), (3, 2, 0), (3, 1, 2)]:
        with pytest.raises(ValueError):
            range_seed(*bad)
    assert range_seed(3, 2, 1).n == 5


def test_bight_example_sizes():
    seed = bight_example(4, 1)
    assert seed.n == 11 and sorted(f.bit_count() for f in seed.facets) == [4, 4, 4]
    with pytest.raises(ValueError):
        bight_example(3, 3)


def test_triangle_plus_point():
    d = triangle_plus_point()
    assert not is_pure(d) and not is_2_pure(d) and d.dim == 2


def test_nerve_counterexample_shape():
    g = nerve_counterexample()
    assert g.n == 10 and len(g.edges) == 9


def test_complete_graph():
    assert len(complete_graph(5).edges) == 10


def test_vwc_expansion_sizes():
    g = vwc_expansion(complete_graph(3), [1, 2, 3])
    assert g.n == 12 and cover_stats(g).is_very_well_covered
    single = vwc_expansion(Graph(("1",), ()), [3])
    assert single.n == 6 and len(single.edges) == 9
    assert v_definitional(cover_ideal(single)) == 3 + 3 - 2
