"""Graphs and clutters, their edge/cover ideals, the multi-whisker and
very-well-covered families, and the nerve / line-graph domination numbers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .bits import bits_of, full_mask, is_antichain, mask_of, minimal_transversals
from .complex import SimplicialComplex, build_complex, check_labels
from .errors import guard
from .ideals import SquarefreeIdeal, dual_ideal

STATS_CAP = 20
NERVE_EDGE_CAP = 20


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", check_labels(self.labels))
        full = full_mask(len(self.labels))
        for e in self.edges:
            if e.bit_count() != 2 or e & ~full:
                raise ValueError(f"bad edge mask {e:#x}: edges join two distinct vertices")
        if list(self.edges) != sorted(set(self.edges)):
            raise ValueError("edges must be sorted and distinct")

    @property
    def n(self) -> int:
        return len(self.labels)

    def neighbors(self, v: int) -> int:
        out = 0
        for e in self.edges:
            if (e >> v) & 1:
                out |= e & ~(1 << v)
        return out

    def edge_names(self, e: int) -> tuple[str, str]:
        a, b = bits_of(e)
        return self.labels[a], self.labels[b]

    def isolated(self) -> int:
        covered = 0
        for e in self.edges:
            covered |= e
        return full_mask(self.n) & ~covered

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(tuple(bits_of(e)) for e in self.edges)
        return g


def graph_from_edges(pairs: Iterable[Sequence], labels: Sequence[str] | None = None) -> Graph:
    pairs = [(str(u), str(v)) for u, v in pairs]
    if labels is None:
        seen: dict[str, None] = {}
        for u, v in pairs:
            seen.setdefault(u, None)
            seen.setdefault(v, None)
        labels = list(seen)
    labels = check_labels(labels)
    idx = {x: i for i, x in enumerate(labels)}
    masks = set()
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        masks.add((1 << idx[u]) | (1 << idx[v]))
    return Graph(labels, tuple(sorted(masks)))


@dataclass(frozen=True)
class Clutter:
    labels: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", check_labels(self.labels))
        if list(self.edges) != sorted(set(self.edges)) or not is_antichain(self.edges):
            raise ValueError("clutter edges must be a sorted antichain")

    def ideal(self) -> SquarefreeIdeal:
        return SquarefreeIdeal(self.labels, self.edges)


def edge_ideal(graph: Graph) -> SquarefreeIdeal:
    if not graph.edges:
        raise ValueError("edgeless graph: the edge ideal is zero")
    return SquarefreeIdeal(graph.labels, graph.edges)


def cover_ideal(graph: Graph) -> SquarefreeIdeal:
    return dual_ideal(edge_ideal(graph))


def independence_complex(graph: Graph) -> SimplicialComplex:
    full = full_mask(graph.n)
    covers = minimal_transversals(graph.edges)
    return SimplicialComplex(graph.labels, tuple(sorted(full & ~c for c in covers)))


def induced_matching_number(graph: Graph) -> int:
    """Largest set of edges, pairwise disjoint with no edge joining two of them."""
    edges = list(graph.edges)
    closed = {}
    for e in edges:
        a, b = bits_of(e)
        closed[e] = e | graph.neighbors(a) | graph.neighbors(b)
    conflict = {e: {f for f in edges if f != e and f & closed[e]} for e in edges}
    best = 0

    def go(cands: list[int], size: int) -> None:
        nonlocal best
        if size + len(cands) <= best:
            return
        if not cands:
            best = max(best, size)
            return
        e, rest = cands[0], cands[1:]
        go([f for f in rest if f not in conflict[e]], size + 1)
        go(rest, size)

    go(edges, 0)
    return best


@dataclass(frozen=True)
class CoverStats:
    minimal_vertex_covers: tuple[int, ...]
    maximal_independent_sets: tuple[int, ...]
    independence_domination: int
    induced_matching: int
    is_well_covered: bool
    is_very_well_covered: bool


def cover_stats(graph: Graph) -> CoverStats:
    guard("graph enumeration", graph.n, STATS_CAP)
    covers = tuple(minimal_transversals(graph.edges))
    indep = independence_complex(graph).facets
    sizes = {f.bit_count() for f in indep}
    well = len(sizes) == 1
    height = min(c.bit_count() for c in covers)
    very = well and graph.isolated() == 0 and graph.n == 2 * height
    return CoverStats(
        minimal_vertex_covers=covers,
        maximal_independent_sets=indep,
        independence_domination=min(sizes),
        induced_matching=induced_matching_number(graph),
        is_well_covered=well,
        is_very_well_covered=very,
    )


def multi_whisker(base: Graph, counts: Sequence[int]) -> Graph:
    """Attach counts[i] pendant vertices y{i}_{j} to the i-th vertex of ``base``."""
    if len(counts) != base.n:
        raise ValueError(f"need one whisker count per vertex ({base.n}), got {len(counts)}")
    if any(c < 1 for c in counts):
        raise ValueError("whisker counts must be positive")
    labels = list(base.labels)
    pairs = [base.edge_names(e) for e in base.edges]
    for i, c in enumerate(counts):
        for j in range(1, c + 1):
            y = f"y{base.labels[i]}_{j}"
            labels.append(y)
            pairs.append((base.labels[i], y))
    return graph_from_edges(pairs, labels)


def whisker(base: Graph) -> Graph:
    return multi_whisker(base, [1] * base.n)


def check_matching(graph: Graph, matching: Sequence[tuple[int, int]]) -> None:
    """Condition (*): x_i y_i edges form a perfect matching and the y's are independent."""
    used = 0
    for x, y in matching:
        e = (1 << x) | (1 << y)
        if x == y or e not in graph.edges:
            raise ValueError(f"{graph.labels[x]}{graph.labels[y]} is not an edge")
        if used & e:
            raise ValueError("matching edges overlap")
        used |= e
    if used != full_mask(graph.n):
        raise ValueError("matching is not perfect")
    ys = mask_of(y for _, y in matching)
    if any(e & ys == e for e in graph.edges):
        raise ValueError("the y side of the matching is not independent")


def bipartite_expansion(graph: Graph, matching: Sequence[tuple[int, int]], counts: Sequence[int]) -> Graph:
    """Replace each matching edge x_i y_i by K_{n_i, n_i}.

    Every other edge uz becomes all edges between the copies of u and of z.
    ``matching`` lists vertex positions (x_i, y_i).
    """
    check_matching(graph, matching)
    if len(counts) != len(matching) or any(c < 1 for c in counts):
        raise ValueError("need one positive count per matching edge")
    copies: dict[int, list[str]] = {}
    labels: list[str] = []
    for (x, y), c in zip(matching, counts):
        for v in (x, y):
            copies[v] = [f"{graph.labels[v]}_{j}" for j in range(1, c + 1)]
        labels.extend(copies[x])
        labels.extend(copies[y])
    pairs = []
    for e in graph.edges:
        u, v = bits_of(e)
        pairs.extend((a, b) for a in copies[u] for b in copies[v])
    return graph_from_edges(pairs, labels)


def whisker_matching(base_n: int) -> list[tuple[int, int]]:
    """Matching x_i -- y_i of ``whisker`` output (x's first, then y's)."""
    return [(i, base_n + i) for i in range(base_n)]


def nerve_edge_label(graph: Graph, e: int) -> str:
    a, b = graph.edge_names(e)
    return f"x{a}-x{b}"


def _edge_stars(graph: Graph) -> list[int]:
    """For each vertex, the mask (over edge positions) of incident edges."""
    stars = []
    for v in range(graph.n):
        stars.append(mask_of(k for k, e in enumerate(graph.edges) if (e >> v) & 1))
    return stars


def nerve_complex(graph: Graph) -> SimplicialComplex:
    """Complex on E(G) whose faces are edge families with a common vertex."""
    if not graph.edges:
        raise ValueError("the nerve needs at least one edge")
    labels = [nerve_edge_label(graph, e) for e in graph.edges]
    return build_complex(labels, (s for s in _edge_stars(graph) if s))


def c_nerve(graph: Graph) -> int | None:
    """Least number of pairwise disjoint nerve facets dominating every edge.

    Returns None when no admissible family exists.
    """
    guard("nerve domination search (edges)", len(graph.edges), NERVE_EDGE_CAP)
    nerve = nerve_complex(graph)
    m = len(graph.edges)
    touch = []
    for e in graph.edges:
        touch.append(mask_of(k for k, f in enumerate(graph.edges) if f & e))
    reach = {}
    for facet in nerve.facets:
        r = facet
        for k in bits_of(facet):
            r |= touch[k]
        reach[facet] = r
    everything = full_mask(m)
    facets = nerve.facets
    for size in range(1, len(facets) + 1):
        for fam in combinations(facets, size):
            if any(a & b for a, b in combinations(fam, 2)):
                continue
            cover = 0
            for f in fam:
                cover |= reach[f]
            if cover == everything:
                return size
    return None


def line_graph(graph: Graph) -> Graph:
    labels = [nerve_edge_label(graph, e) for e in graph.edges]
    pairs = [(labels[a], labels[b]) for a, b in combinations(range(len(graph.edges)), 2)
             if graph.edges[a] & graph.edges[b]]
    return graph_from_edges(pairs, labels)


def c_line(graph: Graph) -> int:
    """Least number of cliques of L(G) whose closed neighborhoods cover L(G).

    Enlarging a clique only enlarges what it dominates, so maximal cliques suffice.
    """
    guard("line-graph clique domination (edges)", len(graph.edges), NERVE_EDGE_CAP)
    lg = line_graph(graph)
    g = lg.to_networkx()
    cliques = [mask_of(c) for c in nx.find_cliques(g)]
    closed = []
    for c in cliques:
        r = c
        for v in bits_of(c):
            r |= lg.neighbors(v)
        closed.append(r)
    everything = full_mask(lg.n)
    for size in range(1, len(cliques) + 1):
        for fam in combinations(closed, size):
            acc = 0
            for r in fam:
                acc |= r
            if acc == everything:
                return size
    raise AssertionError("all maximal cliques together dominate the line graph")
