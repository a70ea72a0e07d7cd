"""Finite simplicial complexes stored by their facets.

A complex lives on an ordered universe of named vertices; faces are bit
masks over vertex ordinals.  The facet list is the canonical form: sorted
lexicographically, pairwise incomparable.  Two special small complexes are
kept distinct:

* ``<{}>`` (one empty facet) — the complex whose only face is the empty set;
* the *void* complex — no faces at all, represented by an empty facet list.

Most operations require a nonvoid complex and raise :class:`VoidComplex`
otherwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .bitsets import (
    bits,
    canonical_sort,
    lex_key,
    mask_of,
    maximal_masks,
    reindex,
)
from .errors import FaceNotInComplex, UnknownVertex, VoidComplex

VertexLabel = str | int
FaceLike = Iterable[VertexLabel]


def _normalize_label(label: VertexLabel) -> str:
    if isinstance(label, str):
        return label
    if isinstance(label, int) and not isinstance(label, bool):
        return str(label)
    raise UnknownVertex(f"vertex labels must be str or int, got {label!r}")


def _normalize_universe(vertices: Iterable[VertexLabel]) -> tuple[str, ...]:
    names = tuple(_normalize_label(v) for v in vertices)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate vertex labels in universe: {names}")
    return names


def _face_labels(face: FaceLike) -> list[str]:
    # A bare string is a single label, not an iterable of characters.
    if isinstance(face, (str, int)):
        return [_normalize_label(face)]
    return [_normalize_label(v) for v in face]


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its canonical facet list.

    Construct through :meth:`from_facets` (which minimalizes generators) or
    the other classmethods; the raw constructor demands canonical input.
    """

    vertex_names: tuple[str, ...]
    facet_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.vertex_names)) != len(self.vertex_names):
            raise ValueError("duplicate vertex labels in universe")
        n = len(self.vertex_names)
        full = (1 << n) - 1
        prev_key: tuple[int, ...] | None = None
        for m in self.facet_masks:
            if m < 0 or m & ~full:
                raise ValueError("facet mask outside the universe")
            k = lex_key(m)
            if prev_key is not None and k <= prev_key:
                raise ValueError("facet masks not in canonical (lex) order")
            prev_key = k
        by_size = sorted(self.facet_masks, key=int.bit_count)
        for a in range(len(by_size)):
            ma = by_size[a]
            for b in range(a + 1, len(by_size)):
                if ma & ~by_size[b] == 0:
                    raise ValueError("facets must be pairwise incomparable")

    # ----- constructors ---------------------------------------------------

    @classmethod
    def from_facets(
        cls, vertices: Iterable[VertexLabel], facets: Iterable[FaceLike]
    ) -> "SimplicialComplex":
        """Complex generated by ``facets``: deduplicated, non-maximal faces
        dropped.  An empty generator list yields the void complex."""
        names = _normalize_universe(vertices)
        index = {name: i for i, name in enumerate(names)}
        masks = []
        for f in facets:
            labels = _face_labels(f)
            for lab in labels:
                if lab not in index:
                    raise UnknownVertex(f"vertex {lab!r} not in universe {names}")
            masks.append(mask_of(index[lab] for lab in labels))
        return cls(names, canonical_sort(maximal_masks(masks)))

    @classmethod
    def from_masks(
        cls, names: tuple[str, ...], masks: Iterable[int]
    ) -> "SimplicialComplex":
        """Internal-ish constructor: masks are taken as facets verbatim
        (deduplicated and canonically sorted, but NOT minimalized)."""
        return cls(names, canonical_sort(set(masks)))

    @classmethod
    def void(cls, vertices: Iterable[VertexLabel]) -> "SimplicialComplex":
        return cls(_normalize_universe(vertices), ())

    @classmethod
    def simplex(cls, vertices: Iterable[VertexLabel]) -> "SimplicialComplex":
        """The full simplex on the given universe (one facet = everything)."""
        names = _normalize_universe(vertices)
        return cls(names, ((1 << len(names)) - 1,) if names else (0,))

    # ----- basic queries --------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def facet_count(self) -> int:
        return len(self.facet_masks)

    @cached_property
    def facets(self) -> tuple[frozenset[str], ...]:
        """Facets as frozensets of labels, in canonical order."""
        return tuple(self.mask_to_face(m) for m in self.facet_masks)

    @cached_property
    def support_mask(self) -> int:
        s = 0
        for m in self.facet_masks:
            s |= m
        return s

    @property
    def vertices_in_use(self) -> frozenset[str]:
        """Labels that belong to at least one face."""
        return self.mask_to_face(self.support_mask)

    def _require_nonvoid(self) -> None:
        if self.is_void:
            raise VoidComplex("operation undefined for the void complex")

    @property
    def dim(self) -> int:
        """Max facet cardinality minus one; <{}> has dimension -1."""
        self._require_nonvoid()
        return max(m.bit_count() for m in self.facet_masks) - 1

    def is_pure(self) -> bool:
        self._require_nonvoid()
        sizes = {m.bit_count() for m in self.facet_masks}
        return len(sizes) == 1

    def is_simplex(self) -> bool:
        """True iff there is exactly one facet (this includes <{}>)."""
        self._require_nonvoid()
        return len(self.facet_masks) == 1

    # ----- faces ------------------------------------------------------------

    def face_mask(self, face: FaceLike) -> int:
        index = {name: i for i, name in enumerate(self.vertex_names)}
        labels = _face_labels(face)
        for lab in labels:
            if lab not in index:
                raise UnknownVertex(
                    f"vertex {lab!r} not in universe {self.vertex_names}"
                )
        return mask_of(index[lab] for lab in labels)

    def mask_to_face(self, mask: int) -> frozenset[str]:
        return frozenset(self.vertex_names[b] for b in bits(mask))

    def contains_mask(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facet_masks)

    def has_face(self, face: FaceLike) -> bool:
        return self.contains_mask(self.face_mask(face))

    def face_masks(self) -> list[int]:
        """Every face as a mask (downward closure of the facets)."""
        seen: set[int] = set(self.facet_masks)
        stack = list(self.facet_masks)
        while stack:
            m = stack.pop()
            for b in bits(m):
                sub = m & ~(1 << b)
                if sub not in seen:
                    seen.add(sub)
                    stack.append(sub)
        return sorted(seen, key=lex_key)

    # ----- the four restriction operations ---------------------------------

    def link(self, face: FaceLike) -> "SimplicialComplex":
        """Faces disjoint from ``face`` whose union with it is a face; lives
        on the universe minus ``face``."""
        fmask = self.face_mask(face)
        if not self.contains_mask(fmask):
            raise FaceNotInComplex(f"{set(_face_labels(face))} is not a face")
        keep = ((1 << self.num_vertices) - 1) & ~fmask
        names = tuple(n for i, n in enumerate(self.vertex_names) if not fmask >> i & 1)
        masks = [h & ~fmask for h in self.facet_masks if h & fmask == fmask]
        # facets of the link are exactly H \ F over facets H containing F;
        # distinct ones are automatically incomparable
        return SimplicialComplex(names, canonical_sort(reindex(masks, keep)))

    def deletion(self, face: FaceLike) -> "SimplicialComplex":
        """Faces disjoint from ``face``; lives on the universe minus ``face``."""
        fmask = self.face_mask(face)
        keep = ((1 << self.num_vertices) - 1) & ~fmask
        names = tuple(n for i, n in enumerate(self.vertex_names) if not fmask >> i & 1)
        masks = maximal_masks(h & ~fmask for h in self.facet_masks)
        return SimplicialComplex(names, canonical_sort(reindex(masks, keep)))

    def induced(self, vertices: FaceLike) -> "SimplicialComplex":
        """Faces contained in ``vertices``; lives on that sub-universe."""
        wmask = self.face_mask(vertices)
        names = tuple(n for i, n in enumerate(self.vertex_names) if wmask >> i & 1)
        masks = maximal_masks(h & wmask for h in self.facet_masks)
        return SimplicialComplex(names, canonical_sort(reindex(masks, wmask)))

    # ----- global structure -------------------------------------------------

    def is_connected(self) -> bool:
        """One component in the facet-overlap graph on the vertices in use.

        Degenerate cases: <{}> and single-vertex complexes are connected;
        0-dimensional complexes with >= 2 vertices are not.
        """
        self._require_nonvoid()
        verts = list(bits(self.support_mask))
        if len(verts) <= 1:
            return True
        parent = {v: v for v in verts}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for m in self.facet_masks:
            vs = list(bits(m))
            for a, b in zip(vs, vs[1:]):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        return len({find(v) for v in verts}) == 1

    def minimal_nonface_masks(self) -> tuple[int, ...]:
        """Minimal subsets of the universe that are not faces.

        A minimal nonface has every proper subset a face, so its size is at
        most (max facet size) + 1; candidates are enumerated by size.
        """
        self._require_nonvoid()
        n = self.num_vertices
        max_size = max(m.bit_count() for m in self.facet_masks) + 1
        found: list[int] = []
        for size in range(1, min(max_size, n) + 1):
            for combo in combinations(range(n), size):
                cand = mask_of(combo)
                if any(nf & ~cand == 0 for nf in found):
                    continue  # contains a smaller nonface
                if self.contains_mask(cand):
                    continue
                if all(
                    self.contains_mask(cand & ~(1 << b)) for b in bits(cand)
                ):
                    found.append(cand)
        return canonical_sort(found)

    def alexander_dual(self) -> "SimplicialComplex":
        """Complex whose faces are complements of the nonfaces; its facets are
        the complements of the minimal nonfaces.  The dual of the full simplex
        is the void complex."""
        self._require_nonvoid()
        full = (1 << self.num_vertices) - 1
        masks = [full & ~nf for nf in self.minimal_nonface_masks()]
        return SimplicialComplex(self.vertex_names, canonical_sort(masks))

    # ----- canonical / structural comparison --------------------------------

    def support_form(self) -> tuple[int, ...]:
        """Facet masks compressed onto the vertices in use: equal forms mean
        'same complex up to order-preserving relabelling of used vertices'."""
        from .bitsets import canonical_form

        return canonical_form(self.facet_masks)

    def relabeled(self, mapping: Mapping[str, str]) -> "SimplicialComplex":
        names = tuple(mapping.get(n, n) for n in self.vertex_names)
        return SimplicialComplex(_normalize_universe(names), self.facet_masks)

    # ----- serialization ------------------------------------------------------

    def as_dict(self) -> dict:
        return {
            "vertices": list(self.vertex_names),
            "facets": [
                [self.vertex_names[b] for b in bits(m)] for m in self.facet_masks
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "SimplicialComplex":
        return cls.from_facets(data["vertices"], data["facets"])

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        if self.is_void:
            return "<void>"
        inner = ", ".join(
            "{" + ",".join(self.vertex_names[b] for b in bits(m)) + "}"
            for m in self.facet_masks
        )
        return f"<{inner}>"
