"""Squarefree monomial ideals: Stanley-Reisner transfer, Alexander duality,
colon ideals and linear quotients.

A squarefree monomial is identified with its support, so an ideal is a
minimal antichain of supports over a named variable universe.  The
Stanley-Reisner correspondence is the usual one: generators of I_Delta are
the minimal nonfaces, faces of the complex of I are the supports avoiding
every generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .betti import BettiTable
from .bitsets import (
    bits,
    canonical_sort,
    lex_key,
    mask_of,
    maximal_sets_avoiding,
    minimal_masks,
)
from .complexes import FaceLike, SimplicialComplex, _face_labels, _normalize_universe
from .errors import BudgetExceeded, NotAPermutation, UnknownVertex, VoidComplex


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """An ideal given by its unique minimal squarefree generators.

    ``generator_masks`` must be a canonical antichain (lex-sorted, pairwise
    incomparable, no empty support: the unit ideal is not representable).
    The zero ideal is the empty generator list.
    """

    variables: tuple[str, ...]
    generator_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        full = (1 << len(self.variables)) - 1
        prev: tuple[int, ...] | None = None
        for m in self.generator_masks:
            if m == 0:
                raise ValueError("unit ideal (empty support) is not representable")
            if m < 0 or m & ~full:
                raise ValueError("generator support outside the variable universe")
            k = lex_key(m)
            if prev is not None and k <= prev:
                raise ValueError("generators not in canonical (lex) order")
            prev = k
        gens = sorted(self.generator_masks, key=int.bit_count)
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                if gens[a] & ~gens[b] == 0:
                    raise ValueError("generators must be pairwise incomparable")

    # ----- constructors ---------------------------------------------------

    @classmethod
    def generated_by(
        cls, variables: Iterable, supports: Iterable[FaceLike]
    ) -> "SquarefreeMonomialIdeal":
        """Minimalize an arbitrary generating family."""
        names = _normalize_universe(variables)
        index = {n: i for i, n in enumerate(names)}
        masks = []
        for sup in supports:
            labels = _face_labels(sup)
            for lab in labels:
                if lab not in index:
                    raise UnknownVertex(f"variable {lab!r} not in {names}")
            masks.append(mask_of(index[lab] for lab in labels))
        if any(m == 0 for m in masks):
            raise ValueError("unit ideal (constant generator) is not representable")
        return cls(names, canonical_sort(minimal_masks(masks)))

    @classmethod
    def zero(cls, variables: Iterable) -> "SquarefreeMonomialIdeal":
        return cls(_normalize_universe(variables), ())

    @classmethod
    def from_masks(
        cls, variables: tuple[str, ...], masks: Iterable[int]
    ) -> "SquarefreeMonomialIdeal":
        return cls(variables, canonical_sort(set(masks)))

    # ----- queries ----------------------------------------------------------

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    @property
    def is_zero(self) -> bool:
        return not self.generator_masks

    @property
    def generators(self) -> tuple[frozenset[str], ...]:
        return tuple(
            frozenset(self.variables[b] for b in bits(m))
            for m in self.generator_masks
        )

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.generator_masks)

    def support_to_mask(self, support: FaceLike) -> int:
        index = {n: i for i, n in enumerate(self.variables)}
        labels = _face_labels(support)
        for lab in labels:
            if lab not in index:
                raise UnknownVertex(f"variable {lab!r} not in {self.variables}")
        return mask_of(index[lab] for lab in labels)

    def as_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "generators": [
                [self.variables[b] for b in bits(m)] for m in self.generator_masks
            ],
        }

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return (
            "("
            + ", ".join(
                "*".join(self.variables[b] for b in bits(m))
                for m in self.generator_masks
            )
            + ")"
        )


# ----- Stanley-Reisner transfer ---------------------------------------------


def stanley_reisner_ideal(sc: SimplicialComplex) -> SquarefreeMonomialIdeal:
    """Generators = minimal nonfaces.  The full simplex gives the zero ideal."""
    if sc.is_void:
        raise VoidComplex("the void complex has no Stanley-Reisner ideal")
    return SquarefreeMonomialIdeal(sc.vertex_names, sc.minimal_nonface_masks())


def stanley_reisner_complex(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Faces = supports avoiding every generator (inverse of the above)."""
    facets = maximal_sets_avoiding(ideal.num_variables, ideal.generator_masks)
    return SimplicialComplex(ideal.variables, canonical_sort(facets))


def alexander_dual_ideal(
    obj: SimplicialComplex | SquarefreeMonomialIdeal,
) -> SquarefreeMonomialIdeal:
    """Generators are the complements of the facets (already a minimal system,
    since facets are incomparable).  Accepts a complex or an ideal."""
    if isinstance(obj, SquarefreeMonomialIdeal):
        sc = stanley_reisner_complex(obj)
    else:
        sc = obj
    if sc.is_void:
        raise VoidComplex("the void complex has no Alexander dual ideal")
    full = (1 << sc.num_vertices) - 1
    masks = [full & ~f for f in sc.facet_masks]
    if any(m == 0 for m in masks):
        raise ValueError(
            "the full simplex has unit Alexander dual ideal (not representable)"
        )
    assert len(set(masks)) == len(masks)
    return SquarefreeMonomialIdeal(sc.vertex_names, canonical_sort(masks))


# ----- colon ideals and linear quotients -------------------------------------


def _colon_masks(prefix: Sequence[int], fmask: int) -> list[int]:
    """Minimal generators of (prefix) : f for squarefree supports:
    minimalize { g \\ f }."""
    return minimal_masks(g & ~fmask for g in prefix)


def colon_by_monomial(
    ideal: SquarefreeMonomialIdeal,
    prefix: Iterable[FaceLike],
    monomial: FaceLike,
) -> tuple[frozenset[str], ...]:
    """Minimal generators of (prefix) : monomial, as variable supports.

    An empty prefix gives the zero colon (empty tuple); if some prefix
    element divides the monomial the colon is the whole ring, reported as a
    single empty support.
    """
    pre = [ideal.support_to_mask(p) for p in prefix]
    fmask = ideal.support_to_mask(monomial)
    out = _colon_masks(pre, fmask)
    return tuple(
        frozenset(ideal.variables[b] for b in bits(m))
        for m in sorted(out, key=lex_key)
    )


@dataclass(frozen=True)
class LinearQuotientsCertificate:
    """A generator order plus, for each position t, the variable set
    generating (f_1,...,f_{t-1}) : f_t.  The first set is always empty."""

    variables: tuple[str, ...]
    order: tuple[frozenset[str], ...]
    sets: tuple[frozenset[str], ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.order)

    @property
    def max_set_size(self) -> int:
        return max((len(s) for s in self.sets), default=0)


def check_linear_quotients(
    ideal: SquarefreeMonomialIdeal, order: Sequence[FaceLike]
) -> LinearQuotientsCertificate | None:
    """Verify a generator order t -> (f_1..f_{t-1}) : f_t is variable-generated
    at every step; return the certificate, or None at the first failure."""
    order_masks = [ideal.support_to_mask(f) for f in order]
    if sorted(order_masks) != sorted(ideal.generator_masks):
        raise NotAPermutation("order is not a permutation of the generators")
    sets: list[frozenset[str]] = []
    for t, fmask in enumerate(order_masks):
        gens = _colon_masks(order_masks[:t], fmask)
        if any(g.bit_count() != 1 for g in gens):
            return None
        sets.append(
            frozenset(ideal.variables[next(bits(g))] for g in gens)
        )
    return LinearQuotientsCertificate(
        ideal.variables,
        tuple(frozenset(ideal.variables[b] for b in bits(m)) for m in order_masks),
        tuple(sets),
    )


DEFAULT_LQ_GENERATOR_CAP = 12


def find_linear_quotients_order(
    ideal: SquarefreeMonomialIdeal,
    *,
    max_generators: int = DEFAULT_LQ_GENERATOR_CAP,
    budget: int = 10**6,
) -> LinearQuotientsCertificate | None:
    """Search for a linear-quotients order: greedy on the minimal-index
    admissible generator with backtracking.  Whether a generator can extend a
    prefix depends only on the prefix as a set, so dead prefix sets are
    memoized; the node budget guards the worst case."""
    gens = ideal.generator_masks
    m = len(gens)
    if m > max_generators:
        raise BudgetExceeded(
            f"{m} generators exceeds the search cap {max_generators}"
        )
    if m == 0:
        return LinearQuotientsCertificate(ideal.variables, (), ())

    dead: set[int] = set()
    chosen: list[int] = []
    nodes = [budget]

    def admissible(fmask: int) -> bool:
        return all(
            g.bit_count() == 1
            for g in _colon_masks([gens[i] for i in chosen], fmask)
        )

    def extend(state: int) -> bool:
        if len(chosen) == m:
            return True
        if state in dead:
            return False
        nodes[0] -= 1
        if nodes[0] < 0:
            raise BudgetExceeded("linear-quotients search budget exhausted")
        for idx in range(m):
            if state >> idx & 1:
                continue
            if admissible(gens[idx]):
                chosen.append(idx)
                if extend(state | (1 << idx)):
                    return True
                chosen.pop()
        dead.add(state)
        return False

    if not extend(0):
        return None
    order = [
        frozenset(ideal.variables[b] for b in bits(gens[i])) for i in chosen
    ]
    cert = check_linear_quotients(ideal, order)
    assert cert is not None
    return cert


def betti_from_linear_quotients(cert: LinearQuotientsCertificate) -> BettiTable:
    """beta_{i,j}(I) = sum over generators of degree j - i of C(|set|, i);
    in particular pd(I) is the largest quotient-set size."""
    entries: dict[tuple[int, int], int] = {}
    for f, s in zip(cert.order, cert.sets):
        d = len(f)
        for i in range(len(s) + 1):
            key = (i, d + i)
            entries[key] = entries.get(key, 0) + comb(len(s), i)
    return BettiTable(entries)
