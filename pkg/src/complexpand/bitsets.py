"""Bit-mask primitives for faces, edges and supports.

A mask encodes a subset of an ordered universe: bit ``i`` is set iff the
vertex with ordinal ``i`` is in the set.  Everything downstream (facets,
hypergraph edges, monomial supports) is stored this way.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(ordinals: Iterable[int]) -> int:
    m = 0
    for i in ordinals:
        m |= 1 << i
    return m


def bits(mask: int) -> Iterator[int]:
    """Ordinals present in a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key giving lexicographic order on the sorted vertex tuples."""
    return tuple(bits(mask))


def canonical_sort(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(masks, key=lex_key))


def pairwise_incomparable(masks: Iterable[int]) -> bool:
    """True iff no mask is contained in a different one (duplicates count
    as comparable)."""
    ms = sorted(masks, key=int.bit_count)
    for a in range(len(ms)):
        for b in range(a + 1, len(ms)):
            if ms[a] & ~ms[b] == 0:  # covers duplicates too
                return False
    return True


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Distinct masks that are not strictly contained in another (any order)."""
    distinct = sorted(set(masks), key=int.bit_count, reverse=True)
    out: list[int] = []
    for m in distinct:
        if not any(m != big and m & ~big == 0 for big in out):
            out.append(m)
    return out


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Distinct masks that do not strictly contain another (any order)."""
    distinct = sorted(set(masks), key=int.bit_count)
    out: list[int] = []
    for m in distinct:
        if not any(small & ~m == 0 for small in out):
            out.append(m)
    return out


def reindex(masks: Iterable[int], keep_mask: int) -> list[int]:
    """Rewrite masks onto the sub-universe of ``keep_mask``'s bits, preserving
    relative order of ordinals.  Every mask must be contained in keep_mask."""
    pos = {b: i for i, b in enumerate(bits(keep_mask))}
    out = []
    for m in masks:
        if m & ~keep_mask:
            raise ValueError("mask not contained in the kept sub-universe")
        out.append(mask_of(pos[b] for b in bits(m)))
    return out


def canonical_form(masks: Iterable[int]) -> tuple[int, ...]:
    """Compress masks onto their union support and sort canonically.

    Two families have equal canonical forms iff they are identical up to an
    order-preserving relabelling of the vertices they actually use.
    """
    ms = list(masks)
    support = 0
    for m in ms:
        support |= m
    return canonical_sort(reindex(ms, support))


def maximal_sets_avoiding(nbits: int, blockers: Iterable[int]) -> list[int]:
    """Inclusion-maximal subsets of an ``nbits`` universe containing no blocker.

    With no blockers the full set is the answer; a zero blocker (the empty
    set blocks everything) yields no sets at all.
    """
    bl = sorted(set(blockers), key=lex_key)
    full = (1 << nbits) - 1
    if not bl:
        return [full]
    if bl[0] == 0:
        return []
    hits: list[int] = []
    seen: set[int] = set()

    def shrink(s: int) -> None:
        if s in seen:
            return
        seen.add(s)
        viol = 0
        for b in bl:
            if b & ~s == 0:
                viol = b
                break
        if not viol:
            hits.append(s)
            return
        for v in bits(viol):
            shrink(s & ~(1 << v))

    shrink(full)
    return maximal_masks(hits)
