"""Bitmask helpers: subsets of ``range(n)`` packed into Python ints."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits_of(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0 and ``mask`` itself (descending)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    """Submasks of ``mask`` with exactly ``k`` bits, in lexicographic index order."""
    for combo in combinations(bits_of(mask), k):
        yield mask_of(combo)


def maximal_elements(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members, sorted ascending as integers."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return sorted(kept)


def minimal_elements(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members, sorted ascending as integers."""
    uniq = sorted(set(masks), key=int.bit_count)
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return sorted(kept)


def is_antichain(masks: Iterable[int]) -> bool:
    ms = list(masks)
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a & b in (a, b):
                return False
    return True


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Minimal hitting sets of a family of sets (Berge's incremental algorithm).

    An empty edge can never be hit, so the result is then empty; an empty
    family is hit by the empty set alone.
    """
    current = [0]
    for edge in sorted(set(edges), key=int.bit_count):
        nxt = set()
        for t in current:
            if t & edge:
                nxt.add(t)
            else:
                for v in bits_of(edge):
                    nxt.add(t | (1 << v))
        current = minimal_elements(nxt)
        if not current:
            break
    return sorted(current)
