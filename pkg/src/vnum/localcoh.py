"""Graded local cohomology of S/I^(l) through Takayama degree complexes.

For a squarefree ideal I with complex Delta and a degree a whose negative
part is a face F, x^a lies in I^(l) S_G exactly when every facet H of Delta
containing G has sum_{i not in H} a_i >= l. Hence

    Delta_a(I^(l)) = < H - F : H facet, F <= H, sum_{i not in H} a_i < l >,

which is what ``scan`` enumerates. A coordinate a_j >= l removes every
surviving facet missing j, leaving a cone over j (or nothing), so positive
entries only need the values 0 .. l-1. The generic generator-based route
(``degree_complex``) is kept as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from .bits import bits_of, full_mask, maximal_elements, submasks
from .complex import SimplicialComplex
from .errors import guard
from .homology import check_field, hdim, homology_of_facets, is_acyclic_cone, reduced_homology_dims
from .ideals import MonomialIdeal, SquarefreeIdeal, complex_of_ideal, is_unmixed, localized_membership

DEGREE_COMPLEX_CAP = 20
SCAN_CAP = 16
NEG_INF = -math.inf


def supp_minus(a: Sequence[int]) -> int:
    return sum(1 << i for i, x in enumerate(a) if x < 0)


def degree_complex(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """{G - supp_-(a) : supp_-(a) <= G, x^a not in I S_G}, by scanning G."""
    n = ideal.n
    guard("degree complex (2^n faces)", n, DEGREE_COMPLEX_CAP)
    if len(a) != n:
        raise ValueError("degree vector has wrong length")
    neg = supp_minus(a)
    rest = full_mask(n) & ~neg
    faces = [g for g in submasks(rest) if not localized_membership(ideal, a, g | neg)]
    return SimplicialComplex(ideal.labels, tuple(maximal_elements(faces)))


def local_cohomology_piece(ideal: MonomialIdeal, i: int, a: Sequence[int], p: int = 2) -> int:
    """dim_k H^i_m(S/I)_a = dim H~_{i - |supp_- a| - 1}(Delta_a(I))."""
    check_field(p)
    dc = degree_complex(ideal, a)
    return hdim(reduced_homology_dims(dc, p), i - supp_minus(a).bit_count() - 1)


def symbolic_degree_facets(facets: Sequence[int], face: int, a: Sequence[int], ell: int) -> list[int]:
    """Facets of Delta_a(I^(ell)) from the facets of Delta (face = supp_- a)."""
    out = []
    for h in facets:
        if h & face != face:
            continue
        weight = sum(x for i, x in enumerate(a) if x > 0 and not (h >> i) & 1)
        if weight < ell:
            out.append(h & ~face)
    return maximal_elements(out)


@dataclass
class Piece:
    face: int
    degree: tuple[int, ...]
    cohomological: int
    dim: int


@dataclass
class LCScan:
    """Nonzero graded pieces of H^i_m(S/I^(l)) found by the capped scan.

    ``degree`` records a representative with -1 on the face; every more
    negative value on the face gives the same piece.
    """

    n: int
    ell: int
    p: int
    krull_dim: int
    pieces: list[Piece] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return min(pc.cohomological for pc in self.pieces)

    def canonical_dim(self, i: int) -> int | float:
        sizes = [pc.face.bit_count() for pc in self.pieces if pc.cohomological == i]
        return max(sizes) if sizes else NEG_INF

    def canonical_dims(self) -> dict[int, int | float]:
        return {i: self.canonical_dim(i) for i in range(self.krull_dim + 1)}


def _level_vectors(free: list[int], ell: int, n: int):
    for values in product(range(ell), repeat=len(free)):
        a = [0] * n
        for i, x in zip(free, values):
            a[i] = x
        yield a


@lru_cache(maxsize=256)
def scan(ideal: SquarefreeIdeal, ell: int, p: int = 2) -> LCScan:
    """All classes of degrees with nonzero local cohomology of S/I^(ell)."""
    check_field(p)
    if ell < 1:
        raise ValueError("ell must be >= 1")
    n = ideal.n
    guard("local cohomology scan (variables)", n, SCAN_CAP)
    delta = complex_of_ideal(ideal)
    facets = delta.facets
    result = LCScan(n, ell, p, int(delta.dim) + 1)
    memo: dict[tuple[int, tuple[int, ...]], dict[int, int]] = {}
    for face in sorted(delta.faces):
        star = [h for h in facets if h & face == face]
        core = -1
        for h in star:
            core &= h
        free = bits_of(full_mask(n) & ~core)
        for a in _level_vectors(free, ell, n):
            tops = symbolic_degree_facets(star, face, a, ell)
            if not tops or is_acyclic_cone(tops):
                continue
            key = (face, tuple(tops))
            dims = memo.get(key)
            if dims is None:
                dims = homology_of_facets(tops, p)
                memo[key] = dims
            for j, d in dims.items():
                if d:
                    degree = tuple(-1 if (face >> i) & 1 else a[i] for i in range(n))
                    result.pieces.append(Piece(face, degree, j + face.bit_count() + 1, d))
    return result


def depth_symbolic(ideal: SquarefreeIdeal, ell: int, p: int = 2) -> int:
    return scan(ideal, ell, p).depth


def canonical_dim(ideal: SquarefreeIdeal, ell: int, i: int, p: int = 2) -> int | float:
    """Krull dimension of K^i of S/I^(ell): the pole order at t = 1 of its Hilbert series.

    Every summand has nonnegative coefficients, so the pole order is the
    largest |F| carrying a nonzero piece; ``-inf`` when K^i = 0.
    """
    return scan(ideal, ell, p).canonical_dim(i)


def serre_depth(ideal: SquarefreeIdeal, ell: int, r: int, p: int = 2) -> int:
    """S_r-depth of S/I^(ell) = min{ j : dim K^j >= j - r + 1 }."""
    if r < 2:
        raise ValueError("Serre-depth needs r >= 2")
    if not is_unmixed(ideal):
        raise ValueError("Serre-depth is defined for unmixed ideals only")
    sc = scan(ideal, ell, p)
    for j in range(sc.krull_dim + 1):
        if sc.canonical_dim(j) >= j - r + 1:
            return j
    raise AssertionError("the top canonical module always has full dimension")


def lc_report(ideal: SquarefreeIdeal, ell: int, p: int = 2, r: int = 2) -> dict:
    sc = scan(ideal, ell, p)
    pieces: dict[str, list] = {}
    for pc in sc.pieces:
        pieces.setdefault(str(pc.cohomological), []).append({"degree": list(pc.degree), "dim": pc.dim})
    report = {
        "ell": ell,
        "char": p,
        "dim": sc.krull_dim,
        "depth": sc.depth,
        "pieces": {k: pieces[k] for k in sorted(pieces, key=int)},
        "canonical_dim": {str(i): ("-inf" if d == NEG_INF else d) for i, d in sc.canonical_dims().items()},
    }
    report[f"S{r}_depth"] = serre_depth(ideal, ell, r, p) if is_unmixed(ideal) else None
    return report
