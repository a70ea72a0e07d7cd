"""Structural deciders: shedding vertices, vertex decomposability, shellings.

Everything here is exact.  The two potentially exponential searches
(vertex decomposability, shelling search) are budgeted: when the node budget
runs out they raise :class:`BudgetExceeded` rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitsets import bits, canonical_form, maximal_masks
from .complexes import FaceLike, SimplicialComplex
from .errors import (
    BudgetExceeded,
    NotAPermutation,
    NotAShelling,
    NotPureOneDimensional,
    VertexNotInComplex,
    VoidComplex,
)
from .expansion import _copy_offsets, iter_expanded_facets, validate_copies
from .homology import RATIONALS, FieldChoice, is_cohen_macaulay

DEFAULT_VD_BUDGET = 10**6
DEFAULT_SHELLING_FACET_CAP = 10
DEFAULT_SHELLING_BUDGET = 10**6


class _Budget:
    __slots__ = ("remaining", "what")

    def __init__(self, remaining: int, what: str):
        self.remaining = remaining
        self.what = what

    def spend(self) -> None:
        self.remaining -= 1
        if self.remaining < 0:
            raise BudgetExceeded(f"{self.what}: node budget exhausted")


def _link_masks(facets: Sequence[int], vbit: int) -> list[int]:
    return [h & ~vbit for h in facets if h & vbit]


def _deletion_masks(facets: Sequence[int], vbit: int) -> list[int]:
    return maximal_masks(h & ~vbit for h in facets)


def _is_shedding(facets: Sequence[int], vbit: int) -> bool:
    """Remark-style criterion: no facet of the link is a facet of the
    deletion.  In debug builds the definition (every facet of the deletion is
    a facet of the whole complex) is recomputed and must agree."""
    lk = set(_link_masks(facets, vbit))
    dl = set(_deletion_masks(facets, vbit))
    shed = not lk & dl
    assert shed == dl.issubset(set(facets))
    return shed


def is_shedding_vertex(sc: SimplicialComplex, vertex: str | int) -> bool:
    if sc.is_void:
        raise VoidComplex("the void complex has no shedding vertices")
    vmask = sc.face_mask([vertex])
    if not sc.support_mask & vmask:
        raise VertexNotInComplex(f"{vertex!r} belongs to no face")
    return _is_shedding(sc.facet_masks, vmask)


def _vd(form: tuple[int, ...], memo: dict, budget: _Budget) -> bool:
    cached = memo.get(form)
    if cached is not None:
        return cached
    budget.spend()
    if len(form) == 1:
        memo[form] = True  # a simplex, including <{}>
        return True
    support = 0
    for m in form:
        support |= m
    result = False
    for b in bits(support):
        vbit = 1 << b
        lk = _link_masks(form, vbit)
        dl = _deletion_masks(form, vbit)
        if set(lk) & set(dl):
            continue  # not a shedding vertex
        if _vd(canonical_form(dl), memo, budget) and _vd(
            canonical_form(lk), memo, budget
        ):
            result = True
            break
    memo[form] = result
    return result


def is_vertex_decomposable(
    sc: SimplicialComplex, *, budget: int = DEFAULT_VD_BUDGET
) -> bool:
    """Recursive decision with memoization on the canonical facet form."""
    if sc.is_void:
        raise VoidComplex("vertex decomposability needs a nonvoid complex")
    return _vd(canonical_form(sc.facet_masks), {}, _Budget(budget, "vertex decomposability"))


def vertex_decomposition_tree(
    sc: SimplicialComplex, *, budget: int = DEFAULT_VD_BUDGET
) -> dict | None:
    """A witness: nested {vertex, link, deletion} dicts down to simplex
    leaves, or None when the complex is not vertex decomposable."""
    if sc.is_void:
        raise VoidComplex("vertex decomposability needs a nonvoid complex")
    memo: dict = {}
    b = _Budget(budget, "vertex decomposability")
    if not _vd(canonical_form(sc.facet_masks), memo, b):
        return None

    def build(masks: tuple[int, ...], names: tuple[str, ...]) -> dict:
        if len(masks) == 1:
            return {
                "simplex": sorted(names[i] for i in bits(masks[0])),
            }
        support = 0
        for m in masks:
            support |= m
        for v in bits(support):
            vbit = 1 << v
            lk = _link_masks(masks, vbit)
            dl = _deletion_masks(masks, vbit)
            if set(lk) & set(dl):
                continue
            if _vd(canonical_form(dl), memo, b) and _vd(canonical_form(lk), memo, b):
                sub_names = tuple(n for i, n in enumerate(names) if i != v)

                def drop(ms: list[int]) -> tuple[int, ...]:
                    return tuple(
                        sum(1 << (i - (i > v)) for i in bits(m)) for m in ms
                    )

                return {
                    "vertex": names[v],
                    "deletion": build(drop(dl), sub_names),
                    "link": build(drop(lk), sub_names),
                }
        raise AssertionError("decomposable complex lost its shedding vertex")

    return build(sc.facet_masks, sc.vertex_names)


# ----- shellings ----------------------------------------------------------------


def _order_masks(sc: SimplicialComplex, order: Sequence[FaceLike]) -> list[int]:
    masks = [sc.face_mask(f) for f in order]
    if sorted(masks) != sorted(sc.facet_masks):
        raise NotAPermutation("order is not a permutation of the facets")
    return masks


def is_shelling(sc: SimplicialComplex, order: Sequence[FaceLike]) -> bool:
    """Order F_1..F_m such that for i < j some v in F_j - F_i satisfies
    F_j - F_l = {v} for an earlier l."""
    masks = _order_masks(sc, order)
    for j in range(1, len(masks)):
        mj = masks[j]
        good = 0
        for ell in range(j):
            diff = mj & ~masks[ell]
            if diff.bit_count() == 1:
                good |= diff
        for i in range(j):
            if not mj & ~masks[i] & good:
                return False
    return True


def _can_append(prefix: list[int], cand: int) -> bool:
    if not prefix:
        return True
    good = 0
    for m in prefix:
        diff = cand & ~m
        if diff.bit_count() == 1:
            good |= diff
    if not good:
        return False
    return all(cand & ~m & good for m in prefix)


def find_shelling(
    sc: SimplicialComplex,
    *,
    max_facets: int = DEFAULT_SHELLING_FACET_CAP,
    budget: int = DEFAULT_SHELLING_BUDGET,
) -> tuple[frozenset[str], ...] | None:
    """Exhaustive backtracking over facet orders, facets tried in canonical
    order.  A prefix's extendability depends only on its facet SET, so dead
    sets are memoized; None means no shelling exists."""
    if sc.is_void:
        raise VoidComplex("shellability needs a nonvoid complex")
    masks = sc.facet_masks
    m = len(masks)
    if m > max_facets:
        raise BudgetExceeded(f"{m} facets exceeds the search cap {max_facets}")
    b = _Budget(budget, "shelling search")
    dead: set[int] = set()
    prefix: list[int] = []
    chosen: list[int] = []

    def extend(state: int) -> bool:
        if len(prefix) == m:
            return True
        if state in dead:
            return False
        b.spend()
        for idx in range(m):
            if state >> idx & 1:
                continue
            if _can_append(prefix, masks[idx]):
                prefix.append(masks[idx])
                chosen.append(idx)
                if extend(state | (1 << idx)):
                    return True
                prefix.pop()
                chosen.pop()
        dead.add(state)
        return False

    if not extend(0):
        return None
    out = tuple(sc.facets[i] for i in chosen)
    assert is_shelling(sc, out)
    return out


def expansion_shelling(
    sc: SimplicialComplex,
    order: Sequence[FaceLike],
    copies: Sequence[int],
) -> tuple[frozenset[str], ...]:
    """Shelling of the expanded complex induced by a shelling of the base:
    parent order first, copy tuples in lexicographic order within a parent.
    The output is checked to be a shelling (that check is the theorem)."""
    from .expansion import expand_complex, expanded_vertex_names

    if not is_shelling(sc, order):
        raise NotAShelling("the given facet order is not a shelling")
    cs = validate_copies(copies, sc.num_vertices)
    offsets = _copy_offsets(cs)
    new_names = expanded_vertex_names(sc.vertex_names, cs)
    out: list[frozenset[str]] = []
    for f in _order_masks(sc, order):
        for _, mask in iter_expanded_facets(f, cs, offsets):
            out.append(frozenset(new_names[b] for b in bits(mask)))
    expanded = expand_complex(sc, cs)
    assert is_shelling(expanded, out)
    return tuple(out)


# ----- the dimension-one equivalence bundle --------------------------------------


@dataclass(frozen=True)
class OneDimFlags:
    connected: bool
    vertex_decomposable: bool
    shellable: bool
    cohen_macaulay: bool

    def all_equal(self) -> bool:
        return (
            self.connected
            == self.vertex_decomposable
            == self.shellable
            == self.cohen_macaulay
        )


def one_dim_equivalences(
    sc: SimplicialComplex,
    field: FieldChoice = RATIONALS,
    *,
    budget: int = DEFAULT_VD_BUDGET,
) -> OneDimFlags:
    """For pure 1-dimensional complexes the four flags coincide; each is
    computed by its own decider and the agreement is asserted."""
    if sc.is_void:
        raise VoidComplex("need a nonvoid complex")
    if sc.dim != 1 or not sc.is_pure():
        raise NotPureOneDimensional(f"dim={sc.dim}, pure={sc.is_pure()}")
    flags = OneDimFlags(
        connected=sc.is_connected(),
        vertex_decomposable=is_vertex_decomposable(sc, budget=budget),
        shellable=find_shelling(
            sc, max_facets=sc.facet_count, budget=budget
        )
        is not None,
        cohen_macaulay=is_cohen_macaulay(sc, field),
    )
    assert flags.all_equal()
    return flags
