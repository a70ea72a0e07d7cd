"""Expansion of complexes and hypergraphs: replace vertex x_i by copies
x_i_1 ... x_i_{s_i}.

A facet F = {x_{i_1} < ... < x_{i_k}} expands to all facets
{x_{i_1 r_1}, ..., x_{i_k r_k}} with 1 <= r_t <= s_{i_t}; a hypergraph edge
expands the same way, plus one 2-edge per pair of copies of a common vertex.
Copy tuples are enumerated in lexicographic order throughout.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence

from .bitsets import bits, canonical_sort, mask_of
from .complexes import SimplicialComplex
from .errors import InvalidExpansionVector, VertexNotInComplex, VoidComplex
from .hypergraphs import Graph, Hypergraph


def validate_copies(copies: Sequence[int], num_vertices: int) -> tuple[int, ...]:
    cs = tuple(copies)
    if len(cs) != num_vertices:
        raise InvalidExpansionVector(
            f"expected {num_vertices} copy counts, got {len(cs)}"
        )
    for s in cs:
        if not isinstance(s, int) or isinstance(s, bool) or s < 1:
            raise InvalidExpansionVector(f"copy counts must be integers >= 1: {cs}")
    return cs


def expanded_vertex_names(
    names: Sequence[str], copies: Sequence[int]
) -> tuple[str, ...]:
    """New universe, ordered by (base vertex, copy index)."""
    return tuple(
        f"{name}_{r}" for name, s in zip(names, copies) for r in range(1, s + 1)
    )


def _copy_offsets(copies: Sequence[int]) -> list[int]:
    offsets = [0]
    for s in copies:
        offsets.append(offsets[-1] + s)
    return offsets


def iter_expanded_facets(
    facet_mask: int, copies: Sequence[int], offsets: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], int]]:
    """All (copy tuple, expanded mask) for one base facet, copy tuples in
    lexicographic order; the tuple is aligned with the facet's vertices in
    ascending base order."""
    base = list(bits(facet_mask))
    for r in product(*(range(1, copies[b] + 1) for b in base)):
        yield r, mask_of(offsets[b] + r[t] - 1 for t, b in enumerate(base))


def expand_complex(sc: SimplicialComplex, copies: Sequence[int]) -> SimplicialComplex:
    """The expanded complex.  The facet count is sum over facets F of
    prod_{x in F} s_x, and expanded facets are automatically incomparable;
    both facts are asserted rather than re-derived."""
    if sc.is_void:
        raise VoidComplex("cannot expand the void complex")
    cs = validate_copies(copies, sc.num_vertices)
    offsets = _copy_offsets(cs)
    names = expanded_vertex_names(sc.vertex_names, cs)
    masks: list[int] = []
    expected = 0
    for f in sc.facet_masks:
        prod = 1
        for b in bits(f):
            prod *= cs[b]
        expected += prod
        masks.extend(m for _, m in iter_expanded_facets(f, cs, offsets))
    assert len(masks) == len(set(masks)) == expected
    # the SimplicialComplex validator asserts pairwise incomparability
    return SimplicialComplex(names, canonical_sort(masks))


def expand_hypergraph(h: Hypergraph, copies: Sequence[int]) -> Hypergraph:
    """Expanded hypergraph: copy-tuples of the original edges plus an edge
    between every two copies of the same vertex.  The result is simple
    (asserted by the constructor)."""
    cs = validate_copies(copies, h.num_vertices)
    offsets = _copy_offsets(cs)
    names = expanded_vertex_names(h.vertex_names, cs)
    masks: list[int] = []
    for e in h.edge_masks:
        masks.extend(m for _, m in iter_expanded_facets(e, cs, offsets))
    for i, s in enumerate(cs):
        for a, b in combinations(range(s), 2):
            masks.append(1 << (offsets[i] + a) | 1 << (offsets[i] + b))
    cls = Graph if isinstance(h, Graph) else Hypergraph
    return cls(names, canonical_sort(masks))


# ----- the two structural identities used by the decomposition arguments -----


def _first_vertex_checkable(sc: SimplicialComplex) -> None:
    if sc.is_void:
        raise VoidComplex("identity checks need a nonvoid complex")
    if sc.num_vertices == 0 or not sc.support_mask & 1:
        raise VertexNotInComplex(
            "the first universe vertex belongs to no face of the complex"
        )


def link_identity_check(sc: SimplicialComplex, copies: Sequence[int]) -> bool:
    """link of the first copy of x_1 in the expansion  ==  expansion of
    link(x_1) by the remaining copy counts (compared on vertices in use)."""
    _first_vertex_checkable(sc)
    cs = validate_copies(copies, sc.num_vertices)
    expanded = expand_complex(sc, cs)
    lhs = expanded.link([f"{sc.vertex_names[0]}_1"])
    rhs = expand_complex(sc.link([sc.vertex_names[0]]), cs[1:])
    return lhs.support_form() == rhs.support_form()


def deletion_identity_check(sc: SimplicialComplex, copies: Sequence[int]) -> bool:
    """deletion of the first copy of x_1 in the expansion  ==  expansion with
    one less copy of x_1 (if s_1 > 1), else expansion of deletion(x_1)."""
    _first_vertex_checkable(sc)
    cs = validate_copies(copies, sc.num_vertices)
    expanded = expand_complex(sc, cs)
    lhs = expanded.deletion([f"{sc.vertex_names[0]}_1"])
    if cs[0] > 1:
        rhs = expand_complex(sc, (cs[0] - 1,) + cs[1:])
    else:
        rhs = expand_complex(sc.deletion([sc.vertex_names[0]]), cs[1:])
    return lhs.support_form() == rhs.support_form()
