"""Randomized search for a Cohen-Macaulay complex whose expansion is not
Cohen-Macaulay.

No such example is known; shellable and one-dimensional cases provably cannot
produce one.  The engine samples bases, expands by random copy vectors,
re-tests, and double-checks any candidate counterexample over GF(32003)
before reporting it.  Reports are plain dicts with no timestamps, so a given
(mode, seed, trials, params) always serializes to the same bytes.
"""

from __future__ import annotations

import random
from typing import Any

from .expansion import expand_complex
from .homology import GF32003, RATIONALS, FieldChoice, is_cohen_macaulay
from .sampling import (
    DEFAULT_MAX_COPY,
    DEFAULT_TOTAL_COPY_CAP,
    child_seed,
    random_complex,
    random_copies,
    random_shellable_complex,
)

MODES = ("cm", "pure-shellable")


def _package_version() -> str:
    from . import __version__

    return __version__


def search_expansion_cm(
    *,
    trials: int,
    seed: int,
    mode: str = "cm",
    field: FieldChoice = RATIONALS,
    max_vertices: int = 5,
    max_copy: int = DEFAULT_MAX_COPY,
    total_copy_cap: int = DEFAULT_TOTAL_COPY_CAP,
) -> dict[str, Any]:
    """Run the search and return the report dict.

    mode "cm": any Cohen-Macaulay base qualifies.
    mode "pure-shellable": bases are pure shellable (hence Cohen-Macaulay);
    their expansions stay pure shellable, so a counterexample here is
    impossible and the run doubles as a regression check.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r} (use one of {MODES})")
    if trials < 0:
        raise ValueError("trials must be nonnegative")

    bases_tested = 0
    bases_skipped = 0
    counterexamples: list[dict[str, Any]] = []
    for trial in range(trials):
        rng = random.Random(child_seed(seed, trial))
        if mode == "pure-shellable":
            sc, _ = random_shellable_complex(rng, max_vertices, pure=True)
            assert is_cohen_macaulay(sc, field)
        else:
            sc = random_complex(rng, max_vertices)
            if not is_cohen_macaulay(sc, field):
                bases_skipped += 1
                continue
        copies = random_copies(
            rng, sc.num_vertices, max_copy=max_copy, total_cap=total_copy_cap
        )
        expanded = expand_complex(sc, copies)
        bases_tested += 1
        if is_cohen_macaulay(expanded, field):
            continue

        base_cm_gf = is_cohen_macaulay(sc, GF32003)
        expanded_cm_gf = is_cohen_macaulay(expanded, GF32003)
        record = {
            "trial": trial,
            "trial_seed": child_seed(seed, trial),
            "base": sc.as_dict(),
            "copies": list(copies),
            "expanded_vertices": expanded.num_vertices,
            "base_cm_gf32003": base_cm_gf,
            "expanded_cm_gf32003": expanded_cm_gf,
            "confirmed_over_gf32003": base_cm_gf and not expanded_cm_gf,
        }
        counterexamples.append(record)
        if mode == "pure-shellable":
            raise AssertionError(
                f"pure shellable base produced a non-CM expansion: {record}"
            )

    return {
        "engine": "expansion-cm-search",
        "version": _package_version(),
        "mode": mode,
        "field": field.label,
        "seed": seed,
        "trials": trials,
        "params": {
            "max_vertices": max_vertices,
            "max_copy": max_copy,
            "total_copy_cap": total_copy_cap,
        },
        "bases_tested": bases_tested,
        "bases_skipped_not_cm": bases_skipped,
        "counterexamples": counterexamples,
        "conjecture_held": not counterexamples,
    }
