"""Simple hypergraphs and graphs: independence complexes, edge ideals,
chordality.

Edges are stored as masks like faces.  Simplicity (all edges of size >= 2 and
pairwise incomparable) is enforced by the constructor; ``from_edges_lenient``
minimalizes noisy input instead, with a warning.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping

from .bitsets import bits, canonical_sort, lex_key, mask_of, maximal_sets_avoiding, minimal_masks
from .complexes import FaceLike, SimplicialComplex, _face_labels, _normalize_universe
from .errors import UnknownVertex
from .ideals import SquarefreeMonomialIdeal


def _edge_masks(
    names: tuple[str, ...], edges: Iterable[FaceLike]
) -> list[int]:
    index = {n: i for i, n in enumerate(names)}
    masks = []
    for e in edges:
        labels = _face_labels(e)
        for lab in labels:
            if lab not in index:
                raise UnknownVertex(f"vertex {lab!r} not in universe {names}")
        masks.append(mask_of(index[lab] for lab in labels))
    return masks


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph: every edge has >= 2 vertices and no edge contains
    another."""

    vertex_names: tuple[str, ...]
    edge_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.vertex_names)) != len(self.vertex_names):
            raise ValueError("duplicate vertex labels")
        full = (1 << len(self.vertex_names)) - 1
        prev: tuple[int, ...] | None = None
        for m in self.edge_masks:
            if m < 0 or m & ~full:
                raise ValueError("edge outside the universe")
            if m.bit_count() < 2:
                raise ValueError("edges must have at least two vertices")
            k = lex_key(m)
            if prev is not None and k <= prev:
                raise ValueError("edges not in canonical (lex) order")
            prev = k
        es = sorted(self.edge_masks, key=int.bit_count)
        for a in range(len(es)):
            for b in range(a + 1, len(es)):
                if es[a] & ~es[b] == 0:
                    raise ValueError("edges must be pairwise incomparable")

    @classmethod
    def from_edges(
        cls, vertices: Iterable, edges: Iterable[FaceLike]
    ) -> "Hypergraph":
        names = _normalize_universe(vertices)
        masks = _edge_masks(names, edges)
        return cls(names, canonical_sort(set(masks)))

    @classmethod
    def from_edges_lenient(
        cls, vertices: Iterable, edges: Iterable[FaceLike]
    ) -> "Hypergraph":
        """Minimalize comparable/duplicate edges (with a warning) instead of
        rejecting them.  Singleton edges are still an error."""
        names = _normalize_universe(vertices)
        masks = _edge_masks(names, edges)
        kept = minimal_masks(masks)
        if len(kept) != len(masks):
            warnings.warn(
                f"dropped {len(masks) - len(kept)} duplicate or non-minimal edges",
                stacklevel=2,
            )
        return cls(names, canonical_sort(kept))

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def edges(self) -> tuple[frozenset[str], ...]:
        return tuple(
            frozenset(self.vertex_names[b] for b in bits(m)) for m in self.edge_masks
        )

    def as_dict(self) -> dict:
        return {
            "vertices": list(self.vertex_names),
            "edges": [
                [self.vertex_names[b] for b in bits(m)] for m in self.edge_masks
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Hypergraph":
        return cls.from_edges(data["vertices"], data["edges"])

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Graph(Hypergraph):
    """A simple graph: all edges have exactly two vertices."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if any(m.bit_count() != 2 for m in self.edge_masks):
            raise ValueError("graph edges must have exactly two vertices")

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.num_vertices
        for m in self.edge_masks:
            a, b = bits(m)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj


def load_graph_or_hypergraph(data: Mapping) -> Hypergraph:
    """JSON loader: returns a Graph when every edge has two vertices."""
    h = Hypergraph.from_dict(data)
    if all(m.bit_count() == 2 for m in h.edge_masks):
        return Graph(h.vertex_names, h.edge_masks)
    return h


# ----- derived objects --------------------------------------------------------


def independence_complex(h: Hypergraph) -> SimplicialComplex:
    """Faces are the subsets containing no edge; facets are the maximal
    independent sets.  An edgeless (hyper)graph gives the full simplex."""
    facets = maximal_sets_avoiding(h.num_vertices, h.edge_masks)
    return SimplicialComplex(h.vertex_names, canonical_sort(facets))


def edge_ideal(h: Hypergraph) -> SquarefreeMonomialIdeal:
    """Generators are the edges; equals the Stanley-Reisner ideal of the
    independence complex."""
    return SquarefreeMonomialIdeal(h.vertex_names, canonical_sort(h.edge_masks))


def is_chordal(g: Graph) -> bool:
    """Maximum-cardinality search + perfect-elimination-order verification.

    Every cycle of length >= 4 must have a chord; MCS visits vertices by how
    many visited neighbours they have, and the graph is chordal iff, for each
    vertex, its earlier-visited neighbours form a clique.
    """
    if not isinstance(g, Graph):
        raise TypeError("chordality is defined for graphs")
    n = g.num_vertices
    if n == 0:
        return True
    adj = g.adjacency_masks()
    weight = [0] * n
    unvisited = set(range(n))
    visited_mask = 0
    order: list[int] = []
    for _ in range(n):
        z = max(unvisited, key=lambda v: (weight[v], -v))
        unvisited.remove(z)
        order.append(z)
        for y in bits(adj[z]):
            if y in unvisited:
                weight[y] += 1
        # earlier-visited neighbours of z must form a clique
        back = adj[z] & visited_mask
        rest = back
        for u in bits(back):
            rest &= ~(1 << u)
            if rest & ~adj[u]:
                return False
        visited_mask |= 1 << z
    return True
