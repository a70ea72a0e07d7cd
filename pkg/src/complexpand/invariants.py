"""Closed-form homological invariants of expansions, each cross-checked
in place against the homology oracle.

For a shellable complex the Stanley-Reisner quotient satisfies
pd = bight = n - (smallest facet size); expanding by copy counts s adds
sum(s) - n to pd and preserves depth.  Regularity of the expanded quotient is
read off Alexander duality (pd of the dual ideal, computed through linear
quotients along the induced shelling) and satisfies
reg <= reg(base) + max_i #{x in F_i : s_x > 1}, with equality dim + 1 when
every s_x > 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .bitsets import bits
from .complexes import SimplicialComplex
from .errors import NotShellable, VoidComplex
from .expansion import (
    _copy_offsets,
    expand_complex,
    iter_expanded_facets,
    validate_copies,
)
from .homology import (
    RATIONALS,
    FieldChoice,
    pd_quotient,
    reg_quotient,
)
from .ideals import (
    LinearQuotientsCertificate,
    alexander_dual_ideal,
    check_linear_quotients,
    stanley_reisner_ideal,
)
from .structure import expansion_shelling, find_shelling, is_shelling


def bight(sc: SimplicialComplex) -> int:
    """Big height of the Stanley-Reisner ideal: the minimal primes are the
    facet complements, so bight = n - min facet size (0 for the full
    simplex)."""
    if sc.is_void:
        raise VoidComplex("bight needs a nonvoid complex")
    return sc.num_vertices - min(m.bit_count() for m in sc.facet_masks)


def _shelling_or_raise(
    sc: SimplicialComplex, shelling: Sequence | None
) -> tuple:
    if shelling is None:
        shelling = find_shelling(sc)
        if shelling is None:
            raise NotShellable("the complex has no shelling")
        return shelling
    if not is_shelling(sc, shelling):
        raise NotShellable("the provided order is not a shelling")
    return tuple(sc.mask_to_face(sc.face_mask(f)) for f in shelling)


def _dual_cert_along_shelling(
    sc: SimplicialComplex, shelling: Sequence[frozenset[str]]
) -> LinearQuotientsCertificate:
    """Linear quotients of the Alexander dual ideal in shelling-complement
    order; exists exactly because the order is a shelling."""
    dual = alexander_dual_ideal(sc)
    universe = set(sc.vertex_names)
    order = [frozenset(universe - set(f)) for f in shelling]
    cert = check_linear_quotients(dual, order)
    assert cert is not None, "shelling-complement order lost linear quotients"
    return cert


@dataclass(frozen=True)
class PdDepthComparison:
    pd_base: int
    pd_expanded: int
    depth_base: int
    depth_expanded: int
    formula_holds: bool


def expansion_pd_depth(
    sc: SimplicialComplex,
    copies: Sequence[int],
    field: FieldChoice = RATIONALS,
    *,
    shelling: Sequence | None = None,
) -> PdDepthComparison:
    """pd(R'/I') = pd(R/I) + sum(s) - n and depth is preserved, for shellable
    complexes.  pd values come from the Hochster oracle and are checked
    against the bight shortcut; the formula itself is asserted."""
    _shelling_or_raise(sc, shelling)
    cs = validate_copies(copies, sc.num_vertices)
    expanded = expand_complex(sc, cs)

    base_ideal = stanley_reisner_ideal(sc)
    exp_ideal = stanley_reisner_ideal(expanded)
    pd_base = pd_quotient(base_ideal, field)
    pd_exp = pd_quotient(exp_ideal, field)
    # shellable => sequentially CM => pd = bight, for the base and (by the
    # induced shelling) for the expansion
    assert pd_base == bight(sc)
    assert pd_exp == bight(expanded)

    n = sc.num_vertices
    holds = pd_exp == pd_base + sum(cs) - n
    depth_base = n - pd_base
    depth_exp = expanded.num_vertices - pd_exp
    assert holds and depth_exp == depth_base
    return PdDepthComparison(pd_base, pd_exp, depth_base, depth_exp, holds)


@dataclass(frozen=True)
class RegComparison:
    reg_base: int
    reg_expanded: int
    bound: int
    equality_case: bool
    max_widened: int


def expansion_reg(
    sc: SimplicialComplex,
    copies: Sequence[int],
    field: FieldChoice = RATIONALS,
    *,
    shelling: Sequence | None = None,
) -> RegComparison:
    """Regularity of the expanded quotient, two independent ways:

    * pd of the Alexander dual ideal of the expansion via linear quotients
      along the induced shelling (regularity by duality), and
    * the Hochster oracle on the expanded Stanley-Reisner ideal;

    asserted equal.  Also asserts reg <= reg(base) + max #{x in F : s_x > 1}
    and, when every s_x > 1, reg = dim + 1."""
    order = _shelling_or_raise(sc, shelling)
    cs = validate_copies(copies, sc.num_vertices)
    expanded = expand_complex(sc, cs)

    if expanded.is_simplex() and expanded.support_mask == (
        1 << expanded.num_vertices
    ) - 1:
        reg_dual = 0  # zero ideal: nothing to dualize
    else:
        exp_order = expansion_shelling(sc, order, cs)
        cert = _dual_cert_along_shelling(expanded, exp_order)
        reg_dual = cert.max_set_size  # pd of the dual ideal = reg of R'/I'
    reg_oracle = reg_quotient(stanley_reisner_ideal(expanded), field)
    assert reg_dual == reg_oracle

    reg_base = reg_quotient(stanley_reisner_ideal(sc), field)
    widened = [
        sum(1 for b in bits(f) if cs[b] > 1) for f in sc.facet_masks
    ]
    max_widened = max(widened)
    bound = reg_base + max_widened
    assert reg_oracle <= bound
    equality_case = all(s > 1 for s in cs)
    if equality_case:
        assert reg_oracle == sc.dim + 1
    return RegComparison(reg_base, reg_oracle, bound, equality_case, max_widened)


# ----- the quotient-set identity for expanded dual ideals ------------------------


@lru_cache(maxsize=32)
def _expansion_set_report(
    sc: SimplicialComplex,
    order: tuple[frozenset[str], ...],
    copies: tuple[int, ...],
) -> Mapping[tuple[int, tuple[int, ...]], frozenset[str]]:
    """For every expanded facet F_i^{r}, the linear-quotient set of its dual
    generator, verified against the closed form:

        set(x^{(F_i^r)^c}) = {x_{i_l, r_l} : l in set of the base generator}
                             union {x_{i_t, r_t} : r_t > 1}.
    """
    base_cert = _dual_cert_along_shelling(sc, order)
    for f, s in zip(order, base_cert.sets):
        assert s <= f  # quotient sets of facet complements live inside the facet

    cs = validate_copies(copies, sc.num_vertices)
    offsets = _copy_offsets(cs)
    exp_order = expansion_shelling(sc, order, cs)
    expanded = expand_complex(sc, cs)
    exp_cert = _dual_cert_along_shelling(expanded, exp_order)

    report: dict[tuple[int, tuple[int, ...]], frozenset[str]] = {}
    pos = 0
    for i, f in enumerate(order):
        fmask = sc.face_mask(f)
        base_vertices = [sc.vertex_names[b] for b in bits(fmask)]
        in_set = base_cert.sets[i]
        for r, _ in iter_expanded_facets(fmask, cs, offsets):
            predicted = frozenset(
                f"{v}_{r[t]}"
                for t, v in enumerate(base_vertices)
                if v in in_set or r[t] > 1
            )
            actual = exp_cert.sets[pos]
            assert predicted == actual, (i, r, predicted, actual)
            report[(i, r)] = actual
            pos += 1
    assert pos == len(exp_cert.sets)
    return report


def set_identity_expansion(
    sc: SimplicialComplex,
    shelling: Sequence,
    copies: Sequence[int],
    facet_index: int,
    copy_tuple: Sequence[int],
) -> frozenset[str]:
    """Quotient set of the dual generator of the expanded facet
    F_{facet_index}^{copy_tuple}; computing it validates the closed form for
    every expanded facet of this (complex, shelling, copies) triple."""
    order = _shelling_or_raise(sc, shelling)
    report = _expansion_set_report(sc, tuple(order), tuple(copies))
    key = (facet_index, tuple(copy_tuple))
    if key not in report:
        raise KeyError(f"no expanded facet {key}")
    return report[key]
