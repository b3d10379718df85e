"""Reduced simplicial homology over prime fields, Hochster's formula and the
ring-theoretic classifications built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .bits import bits_of, maximal_elements, submasks
from .complex import (
    SimplicialComplex,
    alexander_dual,
    deletion,
    induced,
    is_matroid,
    link,
    normalize,
    pure_skeleton,
)
from .errors import guard
from .ideals import SquarefreeIdeal, complex_of_ideal, stanley_reisner_ideal

HOCHSTER_CAP = 20


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def check_field(p: int) -> int:
    if not is_prime(p) or p >= 2**31:
        raise ValueError(f"characteristic must be a prime below 2^31, got {p}")
    return p


def _rank_gf2(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
    return len(basis)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p) by forward elimination."""
    m = np.array(matrix, dtype=np.int64) % p
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, c]), -1, p)
        m[rank] = (m[rank] * inv) % p
        below = m[rank + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = rank + 1 + hit
            m[idx] = (m[idx] - np.outer(m[idx, c], m[rank])) % p
        rank += 1
    return rank


def _boundary_rank(upper: Sequence[int], lower: Sequence[int], p: int) -> int:
    """Rank of the boundary map from faces in ``upper`` to faces in ``lower``."""
    if not upper or not lower:
        return 0
    pos = {f: i for i, f in enumerate(lower)}
    if p == 2:
        rows = []
        for f in upper:
            r = 0
            sub = f
            while sub:
                low = sub & -sub
                r |= 1 << pos[f ^ low]
                sub ^= low
            rows.append(r)
        return _rank_gf2(rows)
    mat = np.zeros((len(upper), len(lower)), dtype=np.int64)
    for i, f in enumerate(upper):
        for j, v in enumerate(bits_of(f)):
            mat[i, pos[f & ~(1 << v)]] = 1 if j % 2 == 0 else -1
    return rank_mod_p(mat, p)


def homology_from_faces(groups: Sequence[Sequence[int]], p: int) -> dict[int, int]:
    """Reduced homology dimensions from faces grouped by size.

    ``groups[s]`` lists the faces with ``s`` vertices (a closed family). The
    result maps i = -1 .. top-1 to dim H~_i.
    """
    if not groups or not groups[0]:
        return {}
    ranks = [0] * (len(groups) + 1)
    for s in range(1, len(groups)):
        ranks[s] = _boundary_rank(groups[s], groups[s - 1], p)
    return {
        s - 1: len(groups[s]) - ranks[s] - ranks[s + 1]
        for s in range(len(groups))
    }


def _groups_of_facets(facets: Iterable[int]) -> list[list[int]]:
    facets = list(facets)
    if not facets:
        return []
    faces: set[int] = set()
    for f in facets:
        if f not in faces:
            faces.update(submasks(f))
    top = max(f.bit_count() for f in facets)
    groups: list[list[int]] = [[] for _ in range(top + 1)]
    for face in faces:
        groups[face.bit_count()].append(face)
    for g in groups:
        g.sort()
    return groups


def homology_of_facets(facets: Iterable[int], p: int) -> dict[int, int]:
    return homology_from_faces(_groups_of_facets(facets), p)


def reduced_homology_dims(delta: SimplicialComplex, p: int = 2) -> dict[int, int]:
    """dim H~_i(delta; GF(p)) for i = -1 .. dim; empty for the void complex."""
    check_field(p)
    return homology_from_faces(delta.faces_by_size, p)


def hdim(dims: dict[int, int], i: int) -> int:
    return dims.get(i, 0)


def is_acyclic_cone(facets: Sequence[int]) -> bool:
    """Nonempty facet list with a common vertex: a cone, so all reduced homology vanishes."""
    if not facets:
        return False
    common = facets[0]
    for f in facets[1:]:
        common &= f
        if not common:
            return False
    return common != 0


@dataclass
class BettiTable:
    """Graded Betti numbers beta_{i,j}(S/I) with the derived invariants."""

    entries: dict[tuple[int, int], int]
    n: int
    p: int
    krull_dim: int | None = None
    labels: tuple[str, ...] = field(default=(), repr=False)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def nonzero(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.entries.items() if v)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.nonzero())

    @property
    def reg(self) -> int:
        """Castelnuovo-Mumford regularity of S/I (reg I is one more)."""
        return max(j - i for i, j in self.nonzero())

    @property
    def depth(self) -> int:
        return self.n - self.pd

    def row(self, i: int) -> dict[int, int]:
        return {j: v for (ii, j), v in sorted(self.entries.items()) if ii == i and v}

    def to_text(self) -> str:
        """Macaulay-style grid: rows indexed by j - i, columns by i."""
        cols = range(self.pd + 1)
        rows = range(self.reg + 1)
        width = max(len(str(v)) for v in self.entries.values()) + 1
        width = max(width, len(str(self.pd)) + 1, 3)
        totals = [sum(self[i, j] for j in range(self.n + 1)) for i in cols]
        lines = ["      " + "".join(f"{i:>{width}}" for i in cols),
                 "total:" + "".join(f"{t:>{width}}" for t in totals)]
        for r in rows:
            cells = []
            for i in cols:
                v = self[i, i + r]
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>5}:" + "".join(cells))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "char": self.p,
            "betti": [[i, j, v] for (i, j), v in sorted(self.entries.items()) if v],
            "reg": self.reg,
            "pd": self.pd,
            "depth": self.depth,
            "dim": self.krull_dim,
        }


def hochster_betti(ideal: SquarefreeIdeal | SimplicialComplex, p: int = 2, *, reverse: bool = False) -> BettiTable:
    """beta_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(Delta_W).

    Subsets W that are faces or whose induced subcomplex is a cone contribute
    nothing and are skipped.
    """
    check_field(p)
    if isinstance(ideal, SimplicialComplex):
        delta = ideal
        ideal = stanley_reisner_ideal(delta)
    else:
        delta = complex_of_ideal(ideal)
    n = ideal.n
    guard("Hochster scan (2^n subsets)", n, HOCHSTER_CAP)
    facets = delta.facets
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    order = range((1 << n) - 1, 0, -1) if reverse else range(1, 1 << n)
    for w in order:
        if any(w & f == w for f in facets):
            continue
        tops = maximal_elements(f & w for f in facets)
        if is_acyclic_cone(tops):
            continue
        j = w.bit_count()
        for k, d in homology_of_facets(tops, p).items():
            if d:
                key = (j - k - 1, j)
                entries[key] = entries.get(key, 0) + d
    kd = int(delta.dim) + 1 if delta.facets else None
    return BettiTable(dict(sorted(entries.items())), n, p, kd, ideal.labels)


def is_cohen_macaulay(delta: SimplicialComplex, p: int = 2) -> bool:
    """Reisner: every link has vanishing reduced homology below its dimension.

    Non-pure complexes fail at once, and links that are cones are skipped.
    """
    check_field(p)
    if not delta.facets:
        return False
    guard("Reisner criterion", delta.n, HOCHSTER_CAP)
    if len({f.bit_count() for f in delta.facets}) > 1:
        return False
    for face in sorted(delta.faces):
        tops = [f & ~face for f in delta.facets if f & face == face]
        if is_acyclic_cone(tops):
            continue
        top = max(t.bit_count() for t in tops) - 1
        dims = homology_of_facets(tops, p)
        if any(d for i, d in dims.items() if i < top):
            return False
    return True


def is_2_cohen_macaulay(delta: SimplicialComplex, p: int = 2) -> bool:
    if not is_cohen_macaulay(delta, p):
        return False
    for x in range(delta.n):
        sub = deletion(delta, x)
        if sub.dim != delta.dim or not is_cohen_macaulay(sub, p):
            return False
    return True


def is_sequentially_cm(delta: SimplicialComplex, p: int = 2) -> bool:
    """Duval: every pure i-skeleton is Cohen-Macaulay."""
    if not delta.facets:
        return False
    if delta.dim < 0:
        return True
    return all(is_cohen_macaulay(pure_skeleton(delta, i), p) for i in range(int(delta.dim) + 1))


@dataclass(frozen=True)
class Classification:
    is_CM: bool
    is_2CM: bool
    is_level: bool
    is_gorenstein: bool
    is_seq_CM: bool


def classify(delta: SimplicialComplex, p: int = 2, betti: BettiTable | None = None) -> Classification:
    if not delta.is_proper:
        raise ValueError(f"classification needs a proper complex, got {delta.kind}")
    delta = normalize(delta)
    cm = is_cohen_macaulay(delta, p)
    if betti is None:
        betti = hochster_betti(delta, p)
    last = betti.row(betti.pd)
    return Classification(
        is_CM=cm,
        is_2CM=cm and is_2_cohen_macaulay(delta, p),
        is_level=len(last) == 1,
        is_gorenstein=cm and sum(last.values()) == 1,
        is_seq_CM=cm or is_sequentially_cm(delta, p),
    )


def _lad_sides(delta: SimplicialComplex, subset: int, p: int, dual: SimplicialComplex | None = None):
    rest = delta.vertex_mask & ~subset
    if rest not in delta:
        raise ValueError("the complement of W must be a face")
    if dual is None:
        dual = alexander_dual(delta)
    return (reduced_homology_dims(link(delta, rest), p),
            reduced_homology_dims(induced(dual, subset), p))


def lad_check(delta: SimplicialComplex, subset: int, i: int, p: int = 2) -> tuple[int, int]:
    """Both sides of local Alexander duality.

    left = dim H~_{i-2}(link(V \\ W)), right = dim H~_{|W|-i-1}((dual)_W).
    """
    left, right = _lad_sides(delta, subset, p)
    return hdim(left, i - 2), hdim(right, subset.bit_count() - i - 1)


def lad_table(delta: SimplicialComplex, subset: int, p: int = 2,
              dual: SimplicialComplex | None = None) -> list[tuple[int, int, int]]:
    """(i, left, right) for every i where either side could be nonzero."""
    left, right = _lad_sides(delta, subset, p, dual)
    w = subset.bit_count()
    return [(i, hdim(left, i - 2), hdim(right, w - i - 1)) for i in range(-1, delta.n + 3)]


def matroid_flag(delta: SimplicialComplex) -> bool:
    return is_matroid(normalize(delta))
