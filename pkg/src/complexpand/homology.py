"""Exact reduced simplicial homology, the Reisner criterion, and graded Betti
numbers of squarefree monomial ideals via Hochster's formula.

All ranks are exact: fraction-free integer elimination (Bareiss) over the
rationals, modular elimination over GF(p).  Boundary matrices of small
complexes dominate the work, so the kernel operates on raw facet masks and
takes closed-form shortcuts (cones, dimension <= 1) that a test pins against
the full matrix path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable
from .bitsets import bits, canonical_form, lex_key, maximal_masks, maximal_sets_avoiding
from .complexes import SimplicialComplex
from .errors import TooLarge, VoidComplex
from .ideals import SquarefreeMonomialIdeal, stanley_reisner_ideal

DEFAULT_FACE_CAP = 1 << 18
DEFAULT_HOCHSTER_VARIABLE_CAP = 14


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldChoice:
    """The coefficient field: rationals (prime=None) or GF(prime)."""

    prime: int | None = None

    def __post_init__(self) -> None:
        if self.prime is not None and not _is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def rationals(cls) -> "FieldChoice":
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> "FieldChoice":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldChoice":
        t = text.strip().lower()
        if t == "q":
            return cls(None)
        if t.startswith("gf:"):
            return cls(int(t[3:]))
        raise ValueError(f"unknown field {text!r} (use 'q' or 'gf:<prime>')")

    @property
    def label(self) -> str:
        return "q" if self.prime is None else f"gf:{self.prime}"


RATIONALS = FieldChoice(None)
GF32003 = FieldChoice(32003)


# ----- exact matrix rank -------------------------------------------------------


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination over the integers (exact rank
    over the rationals)."""
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if rows[i][col]), -1)
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        top = rows[rank]
        for i in range(rank + 1, nr):
            ri = rows[i]
            f = ri[col]
            for j in range(col + 1, nc):
                ri[j] = (p * ri[j] - f * top[j]) // prev
            ri[col] = 0
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def _rank_gf(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank = 0
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if rows[i][col] % p), -1)
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        top = [v * inv % p for v in rows[rank]]
        rows[rank] = top
        for i in range(rank + 1, nr):
            f = rows[i][col] % p
            if f:
                ri = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(ri, top)]
        rank += 1
        if rank == nr:
            break
    return rank


def matrix_rank(rows: list[list[int]], field: FieldChoice) -> int:
    work = [list(r) for r in rows]
    if field.prime is None:
        return _rank_bareiss(work)
    return _rank_gf(work, field.prime)


# ----- reduced homology kernel -------------------------------------------------


def _closure_faces(facet_masks: tuple[int, ...] | list[int]) -> set[int]:
    seen: set[int] = set(facet_masks)
    stack = list(seen)
    while stack:
        m = stack.pop()
        for b in bits(m):
            sub = m & ~(1 << b)
            if sub not in seen:
                seen.add(sub)
                stack.append(sub)
    return seen


def _components(facet_masks: list[int] | tuple[int, ...], support: int) -> int:
    parent = {v: v for v in bits(support)}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for m in facet_masks:
        vs = list(bits(m))
        for a, b in zip(vs, vs[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return len({find(v) for v in parent})


def homology_ranks_of_masks(
    facet_masks: list[int] | tuple[int, ...],
    field: FieldChoice = RATIONALS,
    *,
    fast: bool = True,
    face_cap: int = DEFAULT_FACE_CAP,
) -> dict[int, int]:
    """Nonzero reduced homology ranks {dimension: rank} of the complex
    generated by the given masks (need not be maximal; must be nonempty)."""
    if not facet_masks:
        raise ValueError("homology kernel needs a nonvoid complex")
    support = 0
    for m in facet_masks:
        support |= m
    if support == 0:
        return {-1: 1}  # the complex <{}>
    if fast:
        common = ~0
        for m in facet_masks:
            common &= m
        if common:
            return {}  # a cone is acyclic
        dim = max(m.bit_count() for m in facet_masks) - 1
        if dim == 0:
            k = support.bit_count()
            return {0: k - 1} if k > 1 else {}
        if dim == 1:
            v = support.bit_count()
            e = len({m for m in facet_masks if m.bit_count() == 2})
            c = _components(facet_masks, support)
            out: dict[int, int] = {}
            if c > 1:
                out[0] = c - 1
            cycles = e - v + c
            if cycles:
                out[1] = cycles
            return out
    faces = _closure_faces(facet_masks)
    if len(faces) > face_cap:
        raise TooLarge(f"{len(faces)} faces exceeds the cap {face_cap}")
    by_dim: dict[int, list[int]] = {}
    for m in faces:
        by_dim.setdefault(m.bit_count() - 1, []).append(m)
    for group in by_dim.values():
        group.sort(key=lex_key)
    dim = max(by_dim)
    ranks: dict[int, int] = {}  # rank of boundary_d for d >= 1
    for d in range(1, dim + 1):
        lower = {m: i for i, m in enumerate(by_dim[d - 1])}
        rows = []
        for m in by_dim[d]:
            row = [0] * len(lower)
            for k, b in enumerate(bits(m)):
                row[lower[m & ~(1 << b)]] = -1 if k & 1 else 1
            rows.append(row)
        ranks[d] = matrix_rank(rows, field)
    rank0 = 1 if by_dim.get(0) else 0  # augmentation C_0 -> C_{-1}
    out = {}
    h_minus1 = 1 - rank0
    if h_minus1:
        out[-1] = h_minus1
    for d in range(0, dim + 1):
        n_d = len(by_dim.get(d, ()))
        r_d = ranks.get(d, rank0 if d == 0 else 0)
        h = n_d - r_d - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


@dataclass(frozen=True)
class HomologyRanks:
    """Reduced homology ranks; dimensions with rank zero are omitted from the
    stored tuple but report 0 through :meth:`rank`."""

    ranks: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "HomologyRanks":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def rank(self, dimension: int) -> int:
        for d, r in self.ranks:
            if d == dimension:
                return r
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.ranks)

    @property
    def is_trivial(self) -> bool:
        return not self.ranks


def reduced_homology(
    sc: SimplicialComplex,
    field: FieldChoice = RATIONALS,
    *,
    fast: bool = True,
    face_cap: int = DEFAULT_FACE_CAP,
) -> HomologyRanks:
    if sc.is_void:
        raise VoidComplex("the void complex has no homology here")
    return HomologyRanks.from_dict(
        homology_ranks_of_masks(sc.facet_masks, field, fast=fast, face_cap=face_cap)
    )


# ----- Cohen-Macaulayness (Reisner) --------------------------------------------


def is_cohen_macaulay(
    sc: SimplicialComplex, field: FieldChoice = RATIONALS
) -> bool:
    """Reisner's criterion: for every face F (including the empty one) the
    link of F has vanishing reduced homology below its dimension."""
    if sc.is_void:
        raise VoidComplex("Cohen-Macaulayness needs a nonvoid complex")
    faces = sorted(_closure_faces(sc.facet_masks), key=lambda m: m.bit_count())
    for fmask in faces:
        lk = [h & ~fmask for h in sc.facet_masks if h & fmask == fmask]
        d = max(m.bit_count() for m in lk) - 1
        if d < 1:
            # below-dimension homology of <{}> or of points is always zero
            continue
        ranks = homology_ranks_of_masks(lk, field)
        if any(dd < d and r for dd, r in ranks.items()):
            return False
    return True


# ----- Betti numbers via Hochster's formula ------------------------------------


def betti_numbers_hochster(
    ideal: SquarefreeMonomialIdeal,
    field: FieldChoice = RATIONALS,
    *,
    max_variables: int = DEFAULT_HOCHSTER_VARIABLE_CAP,
) -> BettiTable:
    """Graded Betti numbers of the IDEAL:
    beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(Delta_W).

    Induced subcomplexes repeat heavily, so homology is memoized on the
    canonical (support-compressed) facet form.
    """
    n = ideal.num_variables
    if n > max_variables:
        raise TooLarge(f"{n} variables exceeds the Hochster cap {max_variables}")
    facets = maximal_sets_avoiding(n, ideal.generator_masks)
    memo: dict[tuple[int, ...], dict[int, int]] = {}
    entries: dict[tuple[int, int], int] = {}
    for w in range(1 << n):
        induced = {h & w for h in facets}
        key = canonical_form(maximal_masks(induced))
        ranks = memo.get(key)
        if ranks is None:
            ranks = homology_ranks_of_masks(list(key), field)
            memo[key] = ranks
        if not ranks:
            continue
        j = w.bit_count()
        for d, r in ranks.items():
            i = j - d - 2
            if i >= 0:
                entries[(i, j)] = entries.get((i, j), 0) + r
    return BettiTable(entries)


# ----- scalar invariants of R/I -------------------------------------------------


def pd_quotient(
    ideal: SquarefreeMonomialIdeal, field: FieldChoice = RATIONALS, **kw
) -> int:
    """Projective dimension of R/I; 0 for the zero ideal, else pd(I) + 1."""
    if ideal.is_zero:
        return 0
    pd = betti_numbers_hochster(ideal, field, **kw).projective_dimension
    assert pd is not None
    return pd + 1


def depth_quotient(
    ideal: SquarefreeMonomialIdeal, field: FieldChoice = RATIONALS, **kw
) -> int:
    """depth(R/I) = n - pd(R/I) (Auslander-Buchsbaum)."""
    return ideal.num_variables - pd_quotient(ideal, field, **kw)


def reg_quotient(
    ideal: SquarefreeMonomialIdeal, field: FieldChoice = RATIONALS, **kw
) -> int:
    """Castelnuovo-Mumford regularity of R/I; 0 for the zero ideal."""
    if ideal.is_zero:
        return 0
    reg = betti_numbers_hochster(ideal, field, **kw).regularity
    assert reg is not None
    return reg - 1


def reg_ideal(
    ideal: SquarefreeMonomialIdeal, field: FieldChoice = RATIONALS, **kw
) -> int:
    """Regularity of the ideal itself: reg(R/I) + 1 for nonzero I."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no regularity")
    reg = betti_numbers_hochster(ideal, field, **kw).regularity
    assert reg is not None
    return reg


def krull_dim_quotient(sc: SimplicialComplex) -> int:
    """dim R/I_Delta = dim Delta + 1."""
    if sc.is_void:
        raise VoidComplex("the void complex has no face ring")
    return sc.dim + 1


def sr_quotient_invariants(
    sc: SimplicialComplex, field: FieldChoice = RATIONALS, **kw
) -> dict[str, int]:
    """pd, depth, reg and Krull dimension of the face ring of ``sc``."""
    ideal = stanley_reisner_ideal(sc)
    pd = pd_quotient(ideal, field, **kw)
    return {
        "pd": pd,
        "depth": ideal.num_variables - pd,
        "reg": reg_quotient(ideal, field, **kw),
        "dim": krull_dim_quotient(sc),
    }
