"""Named constructions: the projective plane, the range family, the
big-height family, the two small counterexamples and the graph families."""

from __future__ import annotations

from typing import Sequence

from .complex import SimplicialComplex, alexander_dual, default_labels, from_faces
from .graphs import Graph, bipartite_expansion, graph_from_edges, whisker, whisker_matching

RP2_FACETS = ("123", "124", "135", "146", "156", "236", "245", "256", "345", "346")

NERVE_COUNTEREXAMPLE_EDGES = (
    ("1", "2"), ("2", "5"), ("4", "5"), ("3", "4"), ("5", "6"),
    ("6", "7"), ("7", "8"), ("6", "9"), ("9", "10"),
)


def rp2() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane."""
    return from_faces([list(f) for f in RP2_FACETS], default_labels(6))


def _runs(*spans: tuple[int, int]) -> list[str]:
    out: list[str] = []
    for lo, hi in spans:
        out.extend(str(i) for i in range(lo, hi + 1))
    return out


def range_seed(p: int, q: int, r: int) -> SimplicialComplex:
    """Gamma on p + 2 vertices: two big facets and r isolated vertices."""
    if not (isinstance(p, int) and isinstance(q, int) and isinstance(r, int)) or not p >= q >= r >= 1:
        raise ValueError(f"need p >= q >= r >= 1, got ({p}, {q}, {r})")
    f1 = _runs((1, p - r + 1))
    f2 = _runs((1, p - q), (p - r + 2, p - r + 2))
    singles = [[str(i)] for i in range(p - r + 3, p + 3)]
    return from_faces([f1, f2, *singles], default_labels(p + 2))


def range_complex(p: int, q: int, r: int) -> SimplicialComplex:
    """Pure height-two complex with reg I = p + 1, v = q and indeg = r + 1."""
    return alexander_dual(range_seed(p, q, r))


def bight_example(m: int, ell: int) -> SimplicialComplex:
    """Three facets on 3m - ell vertices, the first two sharing ell vertices.

    The interesting ideal is the one of the Alexander dual.
    """
    if not 1 <= ell < m:
        raise ValueError(f"need 1 <= ell < m, got m={m}, ell={ell}")
    f1 = _runs((1, m))
    f2 = _runs((1, ell), (m + 1, 2 * m - ell))
    f3 = _runs((2 * m - ell + 1, 3 * m - ell))
    return from_faces([f1, f2, f3], default_labels(3 * m - ell))


def triangle_plus_point() -> SimplicialComplex:
    """A triangle plus an isolated vertex."""
    return from_faces([["1", "2", "3"], ["4"]], default_labels(4))


def nerve_counterexample() -> Graph:
    """Ten vertices, nine edges: clique domination in the line graph gives 2, v(I) is 3."""
    return graph_from_edges(NERVE_COUNTEREXAMPLE_EDGES, default_labels(10))


def complete_graph(h: int) -> Graph:
    labels = default_labels(h)
    return graph_from_edges([(labels[i], labels[j]) for i in range(h) for j in range(i + 1, h)], labels)


def vwc_expansion(base: Graph, counts: Sequence[int]) -> Graph:
    """Expand the whisker graph of ``base``: each whisker edge becomes K_{n_i, n_i}."""
    return bipartite_expansion(whisker(base), whisker_matching(base.n), counts)
