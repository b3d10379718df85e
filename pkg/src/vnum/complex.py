"""Simplicial complexes stored as facet antichains over a labelled vertex set.

Faces are bitmasks over the vertex positions. A complex may be *void*
(no faces at all), *irrelevant* (only the empty face) or *proper*. The
vertex set may be larger than the union of the facets; ``normalize`` drops
the unused labels.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .bits import (
    bits_of,
    full_mask,
    is_antichain,
    mask_of,
    maximal_elements,
    minimal_transversals,
    submasks,
    subsets_of_size,
)
from .errors import guard

MAX_VERTICES = 64
MATROID_CAP = 20


def check_labels(labels: Sequence[str]) -> tuple[str, ...]:
    labels = tuple(str(x) for x in labels)
    if not 0 < len(labels) <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {len(labels)}")
    if len(set(labels)) != len(labels):
        dup = sorted({x for x in labels if labels.count(x) > 1})
        raise ValueError(f"duplicate vertex labels: {dup}")
    return labels


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


@dataclass(frozen=True)
class SimplicialComplex:
    labels: tuple[str, ...]
    facets: tuple[int, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", check_labels(self.labels))
        full = full_mask(len(self.labels))
        for f in self.facets:
            if f < 0 or f & ~full:
                raise ValueError(f"face mask {f:#x} out of range for {len(self.labels)} vertices")
        if list(self.facets) != sorted(set(self.facets)) or not is_antichain(self.facets):
            raise ValueError("facets must be a sorted antichain")
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    @property
    def kind(self) -> str:
        if not self.facets:
            return "void"
        if self.facets == (0,):
            return "irrelevant"
        return "proper"

    @property
    def is_proper(self) -> bool:
        return self.kind == "proper"

    @property
    def dim(self) -> int | float:
        """Dimension; ``-inf`` for the void complex."""
        if not self.facets:
            return -math.inf
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def support(self) -> int:
        s = 0
        for f in self.facets:
            s |= f
        return s

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def faces_by_size(self) -> tuple[tuple[int, ...], ...]:
        """Faces grouped by cardinality: entry ``k`` holds the faces with k vertices."""
        if not self.facets:
            return ()
        top = max(f.bit_count() for f in self.facets)
        groups: list[list[int]] = [[] for _ in range(top + 1)]
        for face in self.faces:
            groups[face.bit_count()].append(face)
        return tuple(tuple(sorted(g)) for g in groups)

    def __contains__(self, face: int) -> bool:
        return any(face & f == face for f in self.facets)

    def index(self, label: str) -> int:
        return self._index[label]

    def mask(self, names: Iterable[str]) -> int:
        return mask_of(self._index[str(x)] for x in names)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits_of(mask)]

    def facet_names(self) -> list[list[str]]:
        return [self.names(f) for f in self.facets]

    def with_facets(self, generators: Iterable[int]) -> "SimplicialComplex":
        return SimplicialComplex(self.labels, tuple(maximal_elements(generators)))

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(self.names(f)) + "}" for f in self.facets)
        return f"SimplicialComplex(<{body}> on {self.n} vertices)"


def build_complex(labels: Sequence[str], generators: Iterable[int]) -> SimplicialComplex:
    """Complex generated by the given faces; facets are the maximal generators."""
    labels = check_labels(labels)
    full = full_mask(len(labels))
    gens = list(generators)
    for g in gens:
        if g < 0 or g & ~full:
            raise ValueError(f"face mask {g:#x} out of range for {len(labels)} vertices")
    return SimplicialComplex(labels, tuple(maximal_elements(gens)))


def from_faces(faces: Iterable[Iterable], labels: Sequence[str] | None = None) -> SimplicialComplex:
    """Build from faces written as label lists; labels default to those seen, in order."""
    faces = [[str(x) for x in f] for f in faces]
    if labels is None:
        seen: dict[str, None] = {}
        for f in faces:
            for x in f:
                seen.setdefault(x, None)
        labels = list(seen)
    labels = check_labels(labels)
    idx = {x: i for i, x in enumerate(labels)}
    try:
        gens = [mask_of(idx[x] for x in f) for f in faces]
    except KeyError as exc:
        raise ValueError(f"unknown vertex label {exc.args[0]!r}") from None
    return build_complex(labels, gens)


def simplex(labels: Sequence[str]) -> SimplicialComplex:
    labels = check_labels(labels)
    return SimplicialComplex(labels, (full_mask(len(labels)),))


def minimal_nonfaces(delta: SimplicialComplex) -> list[int]:
    """Inclusion-minimal subsets of V that are not faces, ascending.

    A set is a non-face iff it meets the complement of every facet, so these
    are the minimal transversals of the facet complements.
    """
    full = delta.vertex_mask
    return minimal_transversals(full & ~f for f in delta.facets)


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    full = delta.vertex_mask
    return SimplicialComplex(delta.labels, tuple(sorted(full & ~m for m in minimal_nonfaces(delta))))


def link(delta: SimplicialComplex, face: int) -> SimplicialComplex:
    if face not in delta:
        raise ValueError(f"{delta.names(face)} is not a face")
    return SimplicialComplex(
        delta.labels, tuple(sorted(g & ~face for g in delta.facets if g & face == face))
    )


def star(delta: SimplicialComplex, face: int) -> SimplicialComplex:
    if face not in delta:
        raise ValueError(f"{delta.names(face)} is not a face")
    return SimplicialComplex(delta.labels, tuple(g for g in delta.facets if g & face == face))


def induced(delta: SimplicialComplex, subset: int) -> SimplicialComplex:
    """Induced subcomplex on ``subset`` (same vertex labels)."""
    if subset & ~delta.vertex_mask:
        raise ValueError("subset is not contained in the vertex set")
    return delta.with_facets(g & subset for g in delta.facets)


def deletion(delta: SimplicialComplex, vertex: int) -> SimplicialComplex:
    """The induced subcomplex on V minus one vertex (given by position)."""
    return induced(delta, delta.vertex_mask & ~(1 << vertex))


def skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """All faces of dimension at most ``i``."""
    if i < 0 or i > delta.dim:
        raise ValueError(f"skeleton dimension {i} outside 0..{delta.dim}")
    gens: list[int] = []
    for f in delta.facets:
        if f.bit_count() <= i + 1:
            gens.append(f)
        else:
            gens.extend(subsets_of_size(f, i + 1))
    return delta.with_facets(gens)


def pure_skeleton(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by the faces of dimension exactly ``i``."""
    if i < 0 or i > delta.dim:
        raise ValueError(f"pure skeleton dimension {i} outside 0..{delta.dim}")
    gens: set[int] = set()
    for f in delta.facets:
        if f.bit_count() >= i + 1:
            gens.update(subsets_of_size(f, i + 1))
    return delta.with_facets(gens)


def normalize(delta: SimplicialComplex) -> SimplicialComplex:
    """Restrict the vertex set to the support, keeping label order."""
    keep = bits_of(delta.support)
    if len(keep) == delta.n:
        return delta
    if not keep:
        raise ValueError(f"cannot normalize a {delta.kind} complex")
    pos = {old: new for new, old in enumerate(keep)}
    facets = [mask_of(pos[i] for i in bits_of(f)) for f in delta.facets]
    return SimplicialComplex(tuple(delta.labels[i] for i in keep), tuple(sorted(facets)))


def is_pure(delta: SimplicialComplex) -> bool:
    return len({f.bit_count() for f in delta.facets}) <= 1


def is_2_pure(delta: SimplicialComplex) -> bool:
    """Pure, and every single-vertex deletion is pure of the same dimension."""
    if not is_pure(delta) or not delta.is_proper:
        return False
    d = delta.dim
    for x in range(delta.n):
        sub = deletion(delta, x)
        if sub.dim != d or not is_pure(sub):
            return False
    return True


def free_vertex_map(delta: SimplicialComplex) -> dict[int, int]:
    """For each facet, the mask of vertices lying in no other facet."""
    once = twice = 0
    for f in delta.facets:
        twice |= once & f
        once |= f
    single = once & ~twice
    return {f: f & single for f in delta.facets}


def diameter(delta: SimplicialComplex) -> int | float:
    """Graph diameter of the 1-skeleton over the support; ``inf`` if disconnected."""
    verts = bits_of(delta.support)
    if not verts:
        return 0
    adj = {v: 0 for v in verts}
    for f in delta.facets:
        for v in bits_of(f):
            adj[v] |= f & ~(1 << v)
    best = 0
    for s in verts:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits_of(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < len(verts):
            return math.inf
        best = max(best, max(dist.values()))
    return best


def is_matroid(delta: SimplicialComplex) -> bool:
    """Every induced subcomplex on a subset of the support is pure (exhaustive)."""
    supp = delta.support
    guard("matroid check (2^n subsets)", supp.bit_count(), MATROID_CAP)
    facets = delta.facets
    for w in submasks(supp):
        tops = maximal_elements(g & w for g in facets)
        if len({t.bit_count() for t in tops}) > 1:
            return False
    return True


@dataclass(frozen=True)
class StructuralFlags:
    is_pure: bool
    is_2_pure: bool
    dim: int | float
    free_vertex_map: dict
    is_matroid: bool
    diameter: int | float


def structural_flags(delta: SimplicialComplex) -> StructuralFlags:
    if not delta.is_proper:
        raise ValueError(f"structural flags need a proper complex, got {delta.kind}")
    return StructuralFlags(
        is_pure=is_pure(delta),
        is_2_pure=is_2_pure(delta),
        dim=delta.dim,
        free_vertex_map=free_vertex_map(delta),
        is_matroid=is_matroid(delta),
        diameter=diameter(delta),
    )
