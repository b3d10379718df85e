"""Squarefree and general monomial ideals, the Stanley-Reisner correspondence,
monomial colons, dual ideals and symbolic powers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .bits import bits_of, full_mask, is_antichain, minimal_elements, minimal_transversals
from .complex import SimplicialComplex, check_labels, minimal_nonfaces
from .errors import guard

SYMBOLIC_N_CAP = 20
SYMBOLIC_GEN_CAP = 200_000
SYMBOLIC_PAIR_CAP = 4_000_000


@dataclass(frozen=True)
class MonomialPrime:
    support: int

    def __post_init__(self):
        if self.support <= 0:
            raise ValueError("a monomial prime needs at least one variable")

    @property
    def height(self) -> int:
        return self.support.bit_count()


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Minimal generators given by their supports (an antichain of masks)."""

    labels: tuple[str, ...]
    generators: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", check_labels(self.labels))
        full = full_mask(len(self.labels))
        if any(g < 0 or g & ~full for g in self.generators):
            raise ValueError("generator mask out of range")
        if list(self.generators) != sorted(set(self.generators)) or not is_antichain(self.generators):
            raise ValueError("generators must be a sorted antichain")

    @classmethod
    def from_masks(cls, labels: Sequence[str], masks: Iterable[int]) -> "SquarefreeIdeal":
        return cls(tuple(labels), tuple(minimal_elements(masks)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def is_unit(self) -> bool:
        return 0 in self.generators

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, mask: int) -> bool:
        """Whether the squarefree monomial with support ``mask`` lies in the ideal."""
        return any(g & mask == g for g in self.generators)

    def as_monomial_ideal(self) -> "MonomialIdeal":
        n = self.n
        return MonomialIdeal(self.labels, tuple(sorted(
            tuple((g >> i) & 1 for i in range(n)) for g in self.generators
        )))

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(monomial_str(self.labels, g) for g in self.generators) + ")"


def monomial_str(labels: Sequence[str], mask: int) -> str:
    if not mask:
        return "1"
    return "*".join(f"x{labels[i]}" for i in bits_of(mask))


def _minimize_vectors(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Componentwise-minimal vectors, sorted."""
    uniq = sorted(set(vectors), key=lambda v: (sum(v), v))
    if not uniq:
        return []
    arr = np.array(uniq, dtype=np.int64)
    kept_rows: list[int] = []
    for i in range(len(uniq)):
        if kept_rows and np.any(np.all(arr[kept_rows] <= arr[i], axis=1)):
            continue
        kept_rows.append(i)
    return sorted(uniq[i] for i in kept_rows)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal with minimal generators as exponent vectors."""

    labels: tuple[str, ...]
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", check_labels(self.labels))
        n = len(self.labels)
        gens = tuple(tuple(int(e) for e in g) for g in self.generators)
        for g in gens:
            if len(g) != n or min(g, default=0) < 0:
                raise ValueError(f"bad exponent vector {g}")
        if list(gens) != _minimize_vectors(gens):
            raise ValueError("generators must be a sorted antichain")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_vectors(cls, labels: Sequence[str], vectors: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(tuple(labels), tuple(_minimize_vectors(tuple(v) for v in vectors)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def contains(self, a: Sequence[int]) -> bool:
        return any(all(gi <= ai for gi, ai in zip(g, a)) for g in self.generators)

    def __str__(self) -> str:
        def one(g):
            parts = [f"x{self.labels[i]}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(g) if e]
            return "*".join(parts) or "1"
        return "(" + ", ".join(one(g) for g in self.generators) + ")" if self.generators else "(0)"


def stanley_reisner_ideal(delta: SimplicialComplex) -> SquarefreeIdeal:
    if delta.kind == "void":
        raise ValueError("the void complex has the unit ideal")
    return SquarefreeIdeal(delta.labels, tuple(minimal_nonfaces(delta)))


def complex_of_ideal(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """Faces are the sets containing no generator; facets complement minimal covers."""
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    full = full_mask(ideal.n)
    covers = minimal_transversals(ideal.generators)
    return SimplicialComplex(ideal.labels, tuple(sorted(full & ~c for c in covers)))


def associated_primes(ideal: SquarefreeIdeal) -> list[MonomialPrime]:
    """Minimal primes P_F = (x_j : j not in F) for the facets F, by ascending support."""
    if ideal.is_unit:
        raise ValueError("the unit ideal has no associated primes")
    if ideal.is_zero:
        raise ValueError("the zero ideal has only the zero prime")
    return [MonomialPrime(c) for c in minimal_transversals(ideal.generators)]


@dataclass(frozen=True)
class IdealInvariants:
    height: int
    big_height: int
    arith_degree: int
    initial_degree: int


def ideal_invariants(ideal: SquarefreeIdeal) -> IdealInvariants:
    primes = associated_primes(ideal)
    heights = [p.height for p in primes]
    return IdealInvariants(
        height=min(heights),
        big_height=max(heights),
        arith_degree=len(primes),
        initial_degree=min(g.bit_count() for g in ideal.generators),
    )


def is_unmixed(ideal: SquarefreeIdeal) -> bool:
    return len({p.height for p in associated_primes(ideal)}) == 1


def dual_ideal(ideal: SquarefreeIdeal) -> SquarefreeIdeal:
    """Ideal of the Alexander dual: generated by the minimal covers of the generators."""
    if ideal.is_unit:
        raise ValueError("the unit ideal has no dual here")
    if ideal.is_zero:
        raise ValueError("the zero ideal dualizes to the unit ideal")
    return SquarefreeIdeal(ideal.labels, tuple(minimal_transversals(ideal.generators)))


def colon(ideal: SquarefreeIdeal, monomial: int) -> SquarefreeIdeal:
    """(I : x_C) for a squarefree monomial x_C."""
    return SquarefreeIdeal.from_masks(ideal.labels, (g & ~monomial for g in ideal.generators))


def equals_prime(ideal: SquarefreeIdeal, monomial: int, prime: MonomialPrime) -> bool:
    want = tuple(1 << i for i in bits_of(prime.support))
    return colon(ideal, monomial).generators == want


def _prime_power(n: int, support: int, ell: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(bits_of(support), ell):
        v = [0] * n
        for i in combo:
            v[i] += 1
        out.append(tuple(v))
    return out


def symbolic_power(ideal: SquarefreeIdeal, ell: int) -> MonomialIdeal:
    """I^(ell) as the intersection of P^ell over the associated primes.

    Monomial ideals intersect by taking pairwise lcms (componentwise max) of
    generators followed by minimalization.
    """
    if ell < 1:
        raise ValueError("symbolic power exponent must be >= 1")
    n = ideal.n
    guard("symbolic power variables", n, SYMBOLIC_N_CAP)
    current: list[tuple[int, ...]] | None = None
    for prime in associated_primes(ideal):
        gens = _prime_power(n, prime.support, ell)
        if current is None:
            current = gens
            continue
        guard("symbolic power intermediate generators", len(current) * len(gens), SYMBOLIC_PAIR_CAP)
        current = _minimize_vectors(
            tuple(max(x, y) for x, y in zip(a, b)) for a in current for b in gens
        )
        guard("symbolic power generators", len(current), SYMBOLIC_GEN_CAP)
    return MonomialIdeal(ideal.labels, tuple(_minimize_vectors(current or [])))


def localized_membership(ideal: MonomialIdeal, a: Sequence[int], face: int) -> bool:
    """Whether x^a lies in I S_F, the localization inverting the variables in ``face``.

    ``a`` may be negative only on positions in ``face``.
    """
    n = ideal.n
    if len(a) != n:
        raise ValueError("degree vector has wrong length")
    for i, ai in enumerate(a):
        if ai < 0 and not (face >> i) & 1:
            raise ValueError(f"negative exponent at position {i} outside the inverted face")
    outside = [i for i in range(n) if not (face >> i) & 1]
    return any(all(g[i] <= a[i] for i in outside) for g in ideal.generators)
