"""Seeded random complexes, graphs and clutters for the property suites.

Every sampler returns normalized, proper complexes whose Stanley-Reisner
ideal is neither zero nor the unit ideal; rejected draws are counted in
``Sampler.skipped`` so reports can show them.
"""

from __future__ import annotations

import random
from collections import Counter
from typing import Sequence

from .bits import full_mask, is_antichain, maximal_elements, minimal_elements
from .complex import SimplicialComplex, default_labels, normalize
from .graphs import Clutter, Graph, graph_from_edges
from .ideals import stanley_reisner_ideal

MAX_TRIES = 10_000


def stream_seed(seed: int, name: str) -> str:
    """Independent, reproducible stream per suite (str seeds hash deterministically)."""
    return f"{seed}:{name}"


class Sampler:
    def __init__(self, seed: int | str):
        self.rng = random.Random(seed)
        self.skipped: Counter[str] = Counter()

    def _subset(self, n: int, size: int) -> int:
        out = 0
        for i in self.rng.sample(range(n), size):
            out |= 1 << i
        return out

    def _accept(self, facets: Sequence[int], n: int) -> SimplicialComplex | None:
        delta = SimplicialComplex(default_labels(n), tuple(maximal_elements(facets)))
        if delta.support == 0:
            self.skipped["degenerate"] += 1
            return None
        delta = normalize(delta)
        if delta.facets == (delta.vertex_mask,):
            self.skipped["simplex"] += 1
            return None
        return delta

    def complex(self, n_max: int = 9, n_min: int = 3, max_facets: int = 7) -> SimplicialComplex:
        """Random facets of random sizes on at most ``n_max`` vertices."""
        for _ in range(MAX_TRIES):
            n = self.rng.randint(n_min, n_max)
            k = self.rng.randint(1, max_facets)
            facets = [self._subset(n, self.rng.randint(1, n - 1)) for _ in range(k)]
            delta = self._accept(facets, n)
            if delta is not None:
                return delta
        raise RuntimeError("sampler exhausted its retries")

    def pure_complex(self, height: int, n_max: int = 9, n_min: int | None = None,
                     max_facets: int = 8, unmixed_dual: bool = False) -> SimplicialComplex:
        """Pure complex, all vertices used, with ht I = ``height``.

        With ``unmixed_dual`` the minimal non-faces all have one size, so the
        ideal of the Alexander dual is unmixed.
        """
        lo = n_min if n_min is not None else height + 2
        for _ in range(MAX_TRIES):
            n = self.rng.randint(lo, n_max)
            d = n - height
            if d < 1:
                self.skipped["too few vertices"] += 1
                continue
            k = self.rng.randint(2, max_facets)
            facets = {self._subset(n, d) for _ in range(k)}
            delta = SimplicialComplex(default_labels(n), tuple(sorted(facets)))
            if delta.support != full_mask(n):
                self.skipped["unused vertex"] += 1
                continue
            if unmixed_dual:
                sizes = {g.bit_count() for g in stanley_reisner_ideal(delta).generators}
                if len(sizes) != 1:
                    self.skipped["mixed dual"] += 1
                    continue
            return delta
        raise RuntimeError("sampler exhausted its retries")

    def graph(self, n_max: int = 8, n_min: int = 2, p: float | None = None,
              max_edges: int | None = None) -> Graph:
        """G(n, p) conditioned on having an edge; isolated vertices are kept."""
        for _ in range(MAX_TRIES):
            n = self.rng.randint(n_min, n_max)
            prob = p if p is not None else self.rng.uniform(0.2, 0.7)
            labels = default_labels(n)
            pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)
                     if self.rng.random() < prob]
            if not pairs:
                self.skipped["edgeless"] += 1
                continue
            if max_edges is not None and len(pairs) > max_edges:
                self.skipped["too many edges"] += 1
                continue
            return graph_from_edges(pairs, labels)
        raise RuntimeError("sampler exhausted its retries")

    def base_graph(self, n_max: int = 5, n_min: int = 1) -> Graph:
        """Small base graph with no isolated vertex past the first; n = 1 gives a single vertex."""
        n = self.rng.randint(n_min, n_max)
        labels = default_labels(n)
        pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)
                 if self.rng.random() < 0.5]
        for i in range(1, n):
            if not any(labels[i] in pr for pr in pairs):
                pairs.append((labels[self.rng.randrange(i)], labels[i]))
        if not pairs:
            return Graph(labels, ())
        return graph_from_edges(pairs, labels)

    def counts(self, h: int, hi: int = 3) -> list[int]:
        return [self.rng.randint(1, hi) for _ in range(h)]

    def clutter(self, n_max: int = 9, n_min: int = 3, max_edges: int = 7) -> Clutter:
        """Antichain of nonempty subsets covering every vertex."""
        for _ in range(MAX_TRIES):
            n = self.rng.randint(n_min, n_max)
            k = self.rng.randint(1, max_edges)
            edges = minimal_elements(self._subset(n, self.rng.randint(1, n)) for _ in range(k))
            used = 0
            for e in edges:
                used |= e
            if used != full_mask(n):
                self.skipped["unused vertex"] += 1
                continue
            assert is_antichain(edges)
            return Clutter(default_labels(n), tuple(edges))
        raise RuntimeError("sampler exhausted its retries")
